#include <doctest.h>

#include <numeric>
#include <random>

#include "zmn/arith.hpp"
#include "zmn/errors.hpp"

using namespace zmn;

namespace {

// Trial-division oracles, independent of both the sieve and factorization.
std::int64_t tau_by_count(std::int64_t n) {
  std::int64_t t = 0;
  for (std::int64_t d = 1; d <= n; ++d) t += n % d == 0;
  return t;
}

std::int64_t phi_by_count(std::int64_t n) {
  std::int64_t t = 0;
  for (std::int64_t k = 1; k <= n; ++k) t += std::gcd(k, n) == 1;
  return t;
}

}  // namespace

TEST_CASE("build_tables: small examples") {
  CHECK(build_tables(1).tau(1) == 1);
  CHECK(build_tables(12).tau(12) == 6);
  CHECK(tau_by_count(12) == 6);
  CHECK(build_tables(10).phi(10) == 4);
  CHECK(phi_by_count(10) == 4);
}

TEST_CASE("build_tables: size errors") {
  CHECK_THROWS_AS(build_tables(0), SizeError);
  CHECK_THROWS_AS(build_tables(ArithTables::kMaxLimit + 1), SizeError);
}

TEST_CASE("tables agree with counting oracles on 1..300") {
  const ArithTables t(300);
  for (std::int64_t n = 1; n <= 300; ++n) {
    CHECK(t.tau(n) == tau_by_count(n));
    CHECK(t.phi(n) == phi_by_count(n));
  }
}

TEST_CASE("table invariants") {
  const ArithTables t(20000);
  CHECK(t.tau(1) == 1);
  CHECK(t.phi(1) == 1);
  CHECK(t.mu(1) == 1);
  for (auto p : t.primes()) {
    CHECK(t.tau(p) == 2);
    CHECK(t.phi(p) == p - 1);
    CHECK(t.mu(p) == -1);
  }
  // sum_{d|n} phi(d) = n and sum_{d|n} mu(d) = [n = 1], exhaustively.
  for (std::int64_t n = 1; n <= t.limit(); ++n) {
    std::int64_t phi_sum = 0;
    std::int64_t mu_sum = 0;
    for (auto d : t.divisor_span(n)) {
      phi_sum += t.phi(d);
      mu_sum += t.mu(d);
    }
    REQUIRE(phi_sum == n);
    REQUIRE(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("multiplicativity on random coprime pairs") {
  const ArithTables t(1'000'000, 0);
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<std::int64_t> dist(1, 1000);
  int checked = 0;
  while (checked < 2000) {
    const auto a = dist(rng);
    const auto b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++checked;
    CHECK(t.tau(a * b) == t.tau(a) * t.tau(b));
    CHECK(t.phi(a * b) == t.phi(a) * t.phi(b));
    CHECK(t.mu(a * b) == t.mu(a) * t.mu(b));
  }
}

TEST_CASE("point functions") {
  CHECK(tau_point(1) == 1);
  CHECK(mu_point(4) == 0);
  CHECK(phi_point(36) == 12);
  CHECK(phi_by_count(36) == 12);
  CHECK_THROWS_AS(tau_point(0), DomainError);
  CHECK_THROWS_AS(phi_point(0), DomainError);
  CHECK_THROWS_AS(mu_point(-3), DomainError);

  const ArithTables t(5000);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    REQUIRE(tau_point(n) == t.tau(n));
    REQUIRE(phi_point(n) == t.phi(n));
    REQUIRE(mu_point(n) == t.mu(n));
  }
  // Beyond the table the accessors fall back to factorization.
  CHECK(t.tau(1'000'003LL * 2) == 4);
  CHECK(t.phi(600851475143LL) == 600851475143LL / 71 / 839 / 1471 / 6857 * 70 * 838 * 1470 * 6856);
}

TEST_CASE("gcd") {
  CHECK(gcd(1, 17) == 1);
  CHECK(gcd(4, 6) == 2);
  CHECK(gcd(91, 91) == 91);
  CHECK_THROWS_AS(gcd(0, 5), DomainError);
  CHECK_THROWS_AS(gcd(5, 0), DomainError);
}

TEST_CASE("divisors beyond the materialized cap come from factorization") {
  const ArithTables t(2000, 100);
  CHECK(t.divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(t.divisors(1800) == divisors_from(factorize_point(1800)));
  CHECK(t.divisors(1800).size() == 36);
  CHECK_THROWS_AS(t.divisor_span(1800), SizeError);
}
