#include "zmn/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zmn/errors.hpp"

namespace zmn {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

}  // namespace

ArithTables::ArithTables(std::int64_t limit, std::int64_t divisor_cap)
    : limit_(limit), divisor_cap_(std::min(limit, divisor_cap)) {
  if (limit < 1) throw SizeError("build_tables: limit must be >= 1");
  if (limit > kMaxLimit)
    throw SizeError("build_tables: limit " + std::to_string(limit) + " exceeds memory cap " +
                    std::to_string(kMaxLimit));
  if (divisor_cap < 0) throw SizeError("build_tables: negative divisor cap");

  const auto size = static_cast<std::size_t>(limit) + 1;
  spf_.assign(size, 0);
  tau_.assign(size, 0);
  phi_.assign(size, 0);
  mu_.assign(size, 0);
  tau_[1] = 1;
  phi_[1] = 1;
  mu_[1] = 1;

  // Linear sieve: every composite is crossed off exactly once by its smallest prime.
  for (std::uint32_t i = 2; i <= static_cast<std::uint32_t>(limit); ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t composite = std::uint64_t{p} * i;
      if (p > spf_[i] || composite > static_cast<std::uint64_t>(limit)) break;
      spf_[composite] = p;
    }
  }

  for (std::uint32_t n = 2; n <= static_cast<std::uint32_t>(limit); ++n) {
    const std::uint32_t p = spf_[n];
    std::uint32_t rest = n / p;
    std::uint32_t prime_power = p;
    int e = 1;
    while (rest % p == 0) {
      rest /= p;
      prime_power *= p;
      ++e;
    }
    tau_[n] = static_cast<std::uint16_t>(tau_[rest] * (e + 1));
    phi_[n] = phi_[rest] * (prime_power / p) * (p - 1);
    mu_[n] = e > 1 ? 0 : static_cast<std::int8_t>(-mu_[rest]);
  }

  if (divisor_cap_ > 0) {
    const auto cap = static_cast<std::uint32_t>(divisor_cap_);
    div_offsets_.assign(cap + 2, 0);
    for (std::uint32_t n = 1; n <= cap; ++n) div_offsets_[n + 1] = div_offsets_[n] + tau_[n];
    div_values_.resize(div_offsets_[cap + 1]);
    std::vector<std::uint32_t> fill(div_offsets_.begin(), div_offsets_.end() - 1);
    // Increasing d, so each list comes out sorted.
    for (std::uint32_t d = 1; d <= cap; ++d)
      for (std::uint32_t m = d; m <= cap; m += d) div_values_[fill[m]++] = d;
  }
}

std::int64_t ArithTables::tau(std::int64_t n) const {
  require_positive(n, "tau");
  return n <= limit_ ? tau_[n] : tau_point(n);
}

std::int64_t ArithTables::phi(std::int64_t n) const {
  require_positive(n, "phi");
  return n <= limit_ ? phi_[n] : phi_point(n);
}

std::int64_t ArithTables::mu(std::int64_t n) const {
  require_positive(n, "mu");
  return n <= limit_ ? mu_[n] : mu_point(n);
}

std::int64_t ArithTables::smallest_prime_factor(std::int64_t n) const {
  require_positive(n, "smallest_prime_factor");
  if (n == 1) return 1;
  if (n <= limit_) return spf_[n];
  return factorize_point(n).front().first;
}

Factorization ArithTables::factorize(std::int64_t n) const {
  require_positive(n, "factorize");
  if (n > limit_) return factorize_point(n);
  Factorization f;
  auto m = static_cast<std::uint32_t>(n);
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  return f;
}

std::span<const std::uint32_t> ArithTables::divisor_span(std::int64_t n) const {
  require_positive(n, "divisors");
  if (n > divisor_cap_) throw SizeError("divisor_span: n beyond materialized divisor cap");
  return {div_values_.data() + div_offsets_[n], div_values_.data() + div_offsets_[n + 1]};
}

std::vector<std::int64_t> ArithTables::divisors(std::int64_t n) const {
  require_positive(n, "divisors");
  if (n <= divisor_cap_) {
    auto s = divisor_span(n);
    return {s.begin(), s.end()};
  }
  return divisors_from(factorize(n));
}

ArithTables build_tables(std::int64_t limit) { return ArithTables(limit); }

Factorization factorize_point(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization f;
  for (std::int64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::int64_t tau_point(std::int64_t n) {
  std::int64_t t = 1;
  for (auto [p, e] : factorize_point(n)) t *= e + 1;
  return t;
}

std::int64_t phi_point(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize_point(n)) r = r / p * (p - 1);
  return r;
}

std::int64_t mu_point(std::int64_t n) {
  std::int64_t r = 1;
  for (auto [p, e] : factorize_point(n)) {
    if (e > 1) return 0;
    r = -r;
  }
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("gcd: arguments must be >= 1");
  return std::gcd(a, b);
}

std::vector<std::int64_t> divisors_from(const Factorization& f) {
  std::vector<std::int64_t> divs{1};
  for (auto [p, e] : f) {
    const std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk = checked_mul(pk, p);
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace zmn
