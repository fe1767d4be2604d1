#include "zmn/summatory.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "zmn/compensated.hpp"
#include "zmn/errors.hpp"
#include "zmn/tau_kernel.hpp"

namespace zmn {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_x(double x) {
  if (!(x >= 1)) throw DomainError("summatory: x must be >= 1");
}

// s(m,n) or c(m,n) through F3 / C4.
std::int64_t pair_count(std::int64_t m, std::int64_t n, Variant variant, const ArithTables& t) {
  const std::int64_t g = std::gcd(m, n);
  if (g == 1) return t.tau(m) * t.tau(n);
  std::int64_t sum = 0;
  for (std::int64_t d : t.divisor_span(g)) {
    const std::int64_t w = variant == Variant::S ? d : t.phi(d);
    sum += w * t.tau((m / d) * (n / d));
  }
  return sum;
}

SummatoryResult naive(Variant variant, bool weighted, double x, const ArithTables& tables) {
  if (x > kNaiveCap) throw SizeError("summatory: NAIVE limited to x <= 1e6");
  const auto limit = static_cast<std::int64_t>(std::floor(x));
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(limit)));
  if (tables.limit() < limit || tables.divisor_cap() < root)
    throw SizeError("summatory: tables too small for NAIVE at this x");
  SummatoryResult r{x, variant, weighted, 0, 0.0, Algorithm::Naive, 0.0};
  std::uint64_t exact = 0;
  CompensatedSum acc;
  const double log_x = std::log(x);
  for (std::int64_t m = 1; m <= limit; ++m) {
    for (std::int64_t n = 1; n <= limit / m; ++n) {
      const std::int64_t a = pair_count(m, n, variant, tables);
      if (weighted)
        acc.add(static_cast<double>(a) * (log_x - std::log(static_cast<double>(m * n))));
      else
        exact = checked_add(exact, static_cast<std::uint64_t>(a));
    }
  }
  if (weighted) {
    r.value = acc.value();
  } else {
    r.exact = exact;
    r.value = static_cast<double>(exact);
  }
  return r;
}

SummatoryResult reduced(Variant variant, bool weighted, double x, const ArithTables* tables) {
  if (x > static_cast<double>(kKernelMaxY)) throw SizeError("summatory: REDUCED limited by kernel cap");
  const auto limit = static_cast<std::uint64_t>(std::floor(x));
  const std::uint64_t d_max = isqrt(limit);

  std::optional<ArithTables> own;
  if (variant == Variant::C && (tables == nullptr || tables->limit() < static_cast<std::int64_t>(d_max))) {
    own.emplace(static_cast<std::int64_t>(d_max), 0);
    tables = &*own;
  }

  const double log_x = std::log(x);
  std::vector<KernelQuery> queries(d_max);
  for (std::uint64_t d = 1; d <= d_max; ++d)
    queries[d - 1] = {limit / (d * d), log_x - 2.0 * std::log(static_cast<double>(d))};
  const auto kernel = tau_square_kernel(queries, weighted);

  SummatoryResult r{x, variant, weighted, 0, 0.0, Algorithm::Reduced, 0.0};
  std::uint64_t exact = 0;
  CompensatedSum acc;
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const std::uint64_t w =
        variant == Variant::S ? d : static_cast<std::uint64_t>(tables->phi(static_cast<std::int64_t>(d)));
    if (weighted)
      acc.add(static_cast<double>(w) * kernel[d - 1].weighted);
    else
      exact = checked_add(exact, checked_mul(w, kernel[d - 1].tau_square_sum));
  }
  if (weighted) {
    r.value = acc.value();
  } else {
    r.exact = exact;
    r.value = static_cast<double>(exact);
  }
  return r;
}

template <class F>
SummatoryResult timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  SummatoryResult r = f();
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

SummatoryResult summatory(Variant variant, bool weighted, double x, Algorithm algorithm, const ArithTables& tables) {
  check_x(x);
  return timed([&] {
    return algorithm == Algorithm::Naive ? naive(variant, weighted, x, tables)
                                         : reduced(variant, weighted, x, &tables);
  });
}

SummatoryResult summatory(Variant variant, bool weighted, double x, Algorithm algorithm) {
  check_x(x);
  return timed([&] {
    if (algorithm == Algorithm::Naive) {
      if (x > kNaiveCap) throw SizeError("summatory: NAIVE limited to x <= 1e6");
      const ArithTables tables(static_cast<std::int64_t>(std::floor(x)));
      return naive(variant, weighted, x, tables);
    }
    return reduced(variant, weighted, x, nullptr);
  });
}

DirichletCheck dirichlet_truncation(Variant variant, double z, double w, std::int64_t truncation) {
  if (!(z > 1) || !(w > 1)) throw DomainError("dirichlet_truncation: z and w must exceed 1");
  if (truncation < 1) throw DomainError("dirichlet_truncation: N must be >= 1");
  const ArithTables tables(truncation);

  std::vector<double> m_pow(truncation + 1);
  std::vector<double> n_pow(truncation + 1);
  for (std::int64_t k = 1; k <= truncation; ++k) {
    m_pow[k] = std::pow(static_cast<double>(k), -z);
    n_pow[k] = std::pow(static_cast<double>(k), -w);
  }
  CompensatedSum partial;
  for (std::int64_t m = 1; m <= truncation; ++m)
    for (std::int64_t n = 1; n <= truncation / m; ++n)
      partial.add(static_cast<double>(pair_count(m, n, variant, tables)) * m_pow[m] * n_pow[n]);

  DirichletCheck check;
  check.partial = partial.value();
  constexpr int digits = 30;
  PrecisionScope scope(digits + kGuardDigits);
  const Real zr(z);
  const Real wr(w);
  const Real zeta_z = zeta_real(zr, digits);
  const Real zeta_w = zeta_real(wr, digits);
  const Real numerator = zeta_z * zeta_z * zeta_w * zeta_w * zeta_real(zr + wr - 1, digits);
  const Real denominator = zeta_real(zr + wr, digits);
  const Real closed = variant == Variant::S ? Real(numerator / denominator)
                                            : Real(numerator / (denominator * denominator));
  check.closed = static_cast<double>(closed);
  return check;
}

std::string to_string(Algorithm a) { return a == Algorithm::Naive ? "naive" : "reduced"; }

}  // namespace zmn
