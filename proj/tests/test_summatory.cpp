#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <random>

#include "zmn/errors.hpp"
#include "zmn/group_counts.hpp"
#include "zmn/summatory.hpp"
#include "zmn/tau_kernel.hpp"

using namespace zmn;

TEST_CASE("summatory: examples") {
  const ArithTables t(100);
  CHECK(summatory(Variant::S, false, 4, Algorithm::Naive, t).exact == 20);
  CHECK(summatory(Variant::S, false, 4, Algorithm::Reduced, t).exact == 20);
  CHECK(summatory(Variant::C, false, 4, Algorithm::Naive, t).exact == 19);
  CHECK(summatory(Variant::C, false, 4, Algorithm::Reduced, t).exact == 19);
  const double expected = std::log(3.0) + 4 * std::log(1.5);
  CHECK(summatory(Variant::S, true, 3, Algorithm::Naive, t).value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(summatory(Variant::S, true, 3, Algorithm::Naive, t).value == doctest::Approx(2.720473).epsilon(1e-6));
  CHECK(summatory(Variant::S, true, 3, Algorithm::Reduced, t).value == doctest::Approx(expected).epsilon(1e-15));
  for (auto v : {Variant::S, Variant::C}) {
    for (auto a : {Algorithm::Naive, Algorithm::Reduced}) {
      CHECK(summatory(v, true, 1, a, t).value == 0.0);
      CHECK(summatory(v, false, 1, a, t).exact == 1);
    }
  }
  const auto r = summatory(Variant::S, false, 4.5, Algorithm::Reduced);
  CHECK(r.exact == 20);
  CHECK(r.algorithm == Algorithm::Reduced);
  CHECK(r.elapsed >= 0);
}

TEST_CASE("summatory: errors") {
  const ArithTables t(100);
  CHECK_THROWS_AS(summatory(Variant::S, false, 0.5, Algorithm::Reduced), DomainError);
  CHECK_THROWS_AS(summatory(Variant::S, false, std::nan(""), Algorithm::Naive), DomainError);
  CHECK_THROWS_AS(summatory(Variant::S, false, 2e6, Algorithm::Naive), SizeError);
  CHECK_THROWS_AS(summatory(Variant::S, false, 1000, Algorithm::Naive, t), SizeError);
  CHECK_THROWS_AS(summatory(Variant::S, false, 5e9, Algorithm::Reduced), SizeError);
}

TEST_CASE("naive and reduced agree at random x") {
  const ArithTables t(100'000);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(1.0, 5.0);
  for (int i = 0; i < 25; ++i) {
    const double x = std::pow(10.0, dist(rng));
    CAPTURE(x);
    for (auto v : {Variant::S, Variant::C}) {
      REQUIRE(summatory(v, false, x, Algorithm::Naive, t).exact == summatory(v, false, x, Algorithm::Reduced, t).exact);
      const double a = summatory(v, true, x, Algorithm::Naive, t).value;
      const double b = summatory(v, true, x, Algorithm::Reduced, t).value;
      CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
    }
  }
}

TEST_CASE("weighted sum is the integral of the unweighted one") {
  // D~(x) = sum_{k <= x} a(k) log(x / k), a(k) = sum_{mn = k} s(m, n).
  const double x = 1000;
  const ArithTables t(1000);
  std::vector<std::int64_t> a(1001, 0);
  for (std::int64_t m = 1; m <= 1000; ++m)
    for (std::int64_t n = 1; m * n <= 1000; ++n) a[m * n] += s_count(m, n, SFormula::F1, t);
  long double integral = 0;
  std::int64_t total = 0;
  for (int k = 1; k <= 1000; ++k) {
    integral += a[k] * std::log(static_cast<long double>(x) / k);
    total += a[k];
  }
  const double weighted = summatory(Variant::S, true, x, Algorithm::Reduced, t).value;
  CHECK(std::abs(weighted - static_cast<double>(integral)) <= 1e-10 * weighted);
  CHECK(summatory(Variant::S, false, x, Algorithm::Reduced, t).exact == static_cast<std::uint64_t>(total));
}

TEST_CASE("monotone and continuous") {
  double prev = -1;
  std::uint64_t prev_exact = 0;
  for (double x = 1.5; x < 5000; x *= 1.37) {
    const double v = summatory(Variant::C, true, x, Algorithm::Reduced).value;
    const auto e = summatory(Variant::S, false, x, Algorithm::Reduced).exact;
    CHECK(v > prev);
    CHECK(e >= prev_exact);
    prev = v;
    prev_exact = e;
  }
  for (double x : {100.0, 1000.0, 4096.0}) {
    for (auto v : {Variant::S, Variant::C}) {
      const double below = summatory(v, true, x, Algorithm::Reduced).value;
      const double above = summatory(v, true, x * (1 + 1e-9), Algorithm::Reduced).value;
      CHECK(above >= below);
      CHECK(above - below <= 1e-7 * below);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  std::vector<KernelQuery> queries;
  for (std::uint64_t d = 1; d <= 1000; ++d) queries.push_back({1'000'000 / (d * d), std::log(1e6 / (d * d))});
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto a = tau_square_kernel(queries, true, 10'000);
  omp_set_num_threads(4);
  const auto b = tau_square_kernel(queries, true, 10'000);
  omp_set_num_threads(saved);
  for (std::size_t i = 0; i < queries.size(); ++i) {
    CHECK(a[i].tau_square_sum == b[i].tau_square_sum);
    CHECK(a[i].weighted == b[i].weighted);
  }
}

TEST_CASE("Dirichlet series truncations") {
  const auto one = dirichlet_truncation(Variant::S, 2, 2, 1);
  CHECK(one.partial == 1);
  CHECK(one.closed == doctest::Approx(8.131338215828054).epsilon(1e-14));
  const double zeta4 = std::pow(M_PI, 4) / 90;
  const auto c = dirichlet_truncation(Variant::C, 2, 2, 1);
  CHECK(c.closed == doctest::Approx(one.closed / zeta4).epsilon(1e-14));

  double prev = 0;
  for (std::int64_t n : {10, 100, 1000}) {
    for (auto v : {Variant::S, Variant::C}) {
      const auto check = dirichlet_truncation(v, 2, 2, n);
      CHECK(check.partial < check.closed);
      CHECK(check.gap() > 0);
    }
    const auto s = dirichlet_truncation(Variant::S, 2, 2, n);
    CHECK(s.partial > prev);
    prev = s.partial;
  }
  const auto asym = dirichlet_truncation(Variant::S, 1.5, 3, 2000);
  CHECK(asym.partial < asym.closed);
  CHECK_THROWS_AS(dirichlet_truncation(Variant::S, 1, 2, 10), DomainError);
  CHECK_THROWS_AS(dirichlet_truncation(Variant::S, 2, 0.5, 10), DomainError);
  CHECK_THROWS_AS(dirichlet_truncation(Variant::S, 2, 2, 0), DomainError);
}
