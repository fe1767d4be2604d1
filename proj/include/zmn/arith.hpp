#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zmn {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

/// Sieved values of tau, phi and mu on 1..limit.
///
/// Built once by a smallest-prime-factor linear sieve; immutable afterwards and
/// safe to share across threads. Lookups beyond `limit` fall back to trial
/// division, so every accessor accepts any n >= 1.
///
/// Divisor lists are materialized only for n <= divisor_cap (CSR layout);
/// larger n get their divisors from factorization on demand.
class ArithTables {
 public:
  /// 13 bytes per entry; 5e7 entries stay below 700 MB.
  static constexpr std::int64_t kMaxLimit = 50'000'000;
  static constexpr std::int64_t kDefaultDivisorCap = 1'000'000;

  explicit ArithTables(std::int64_t limit, std::int64_t divisor_cap = kDefaultDivisorCap);

  std::int64_t limit() const { return limit_; }
  std::int64_t divisor_cap() const { return divisor_cap_; }

  std::int64_t tau(std::int64_t n) const;
  std::int64_t phi(std::int64_t n) const;
  std::int64_t mu(std::int64_t n) const;
  std::int64_t smallest_prime_factor(std::int64_t n) const;

  /// Sorted divisors of n.
  std::vector<std::int64_t> divisors(std::int64_t n) const;

  /// Zero-copy view of the divisors of n; requires n <= divisor_cap().
  std::span<const std::uint32_t> divisor_span(std::int64_t n) const;

  Factorization factorize(std::int64_t n) const;

  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::int64_t limit_;
  std::int64_t divisor_cap_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint16_t> tau_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> div_offsets_;
  std::vector<std::uint32_t> div_values_;
};

ArithTables build_tables(std::int64_t limit);

// Point evaluations by trial division; valid for any n >= 1.
Factorization factorize_point(std::int64_t n);
std::int64_t tau_point(std::int64_t n);
std::int64_t phi_point(std::int64_t n);
std::int64_t mu_point(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// All divisors of the number with the given factorization, sorted.
std::vector<std::int64_t> divisors_from(const Factorization& f);

}  // namespace zmn
