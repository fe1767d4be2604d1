#include <doctest.h>

#include <random>

#include "zmn/constants.hpp"
#include "zmn/errors.hpp"
#include "zmn/residue.hpp"
#include "zmn/series.hpp"

using namespace zmn;

namespace {

TruncatedLaurent random_series(std::mt19937_64& rng, int low, int len) {
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<Real> c;
  for (int i = 0; i < len; ++i) c.emplace_back(dist(rng));
  // Keep the leading coefficient away from zero so the inverse stays well conditioned.
  const Real lead = 1 + abs(c[0]) / 3;
  c[0] = dist(rng) < 0 ? Real(-lead) : lead;
  return {low, std::move(c)};
}

bool is_unit(const TruncatedLaurent& s, const Real& tol) {
  for (int p = s.low(); p <= s.order(); ++p) {
    const Real expected = p == 0 ? 1 : 0;
    if (abs(s.coefficient(p) - expected) > tol) return false;
  }
  return s.low() <= 0 && s.order() >= 0;
}

}  // namespace

TEST_CASE("coefficient access and truncation") {
  PrecisionScope scope(30);
  const TruncatedLaurent a(-2, {Real(1), Real(2), Real(3), Real(4)});
  CHECK(a.low() == -2);
  CHECK(a.order() == 1);
  CHECK(a.pole_order() == 2);
  CHECK(a.coefficient(-3) == 0);
  CHECK(a.coefficient(0) == 3);
  CHECK_THROWS_AS(a.coefficient(2), DomainError);
  CHECK(a.truncated(-1).order() == -1);
  CHECK_THROWS_AS(a.truncated(2), DomainError);
  CHECK(TruncatedLaurent::unit(3).coefficient(0) == 1);
  CHECK(TruncatedLaurent::taylor({Real(5)}).pole_order() == 0);
}

TEST_CASE("product of known series") {
  PrecisionScope scope(30);
  // (1 + u)(1 - u) = 1 - u^2
  const auto a = TruncatedLaurent::taylor({Real(1), Real(1), Real(0), Real(0)});
  const auto b = TruncatedLaurent::taylor({Real(1), Real(-1), Real(0), Real(0)});
  const auto p = series_mul(a, b);
  CHECK(p.order() == 3);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(2) == -1);
  // 1/(1 - u) = 1 + u + u^2 + ...
  const auto inv = series_inverse(b);
  for (int k = 0; k <= 3; ++k) CHECK(inv.coefficient(k) == 1);
}

TEST_CASE("order propagates through poles") {
  PrecisionScope scope(30);
  // u^-1 known through u^2 times a Taylor series through u^3: the product is exact only through u^2.
  const TruncatedLaurent a(-1, {Real(1), Real(1), Real(1), Real(1)});
  const auto b = TruncatedLaurent::taylor({Real(1), Real(2), Real(3), Real(4)});
  CHECK(series_mul(a, b).order() == 2);
  CHECK(series_mul(a, b).low() == -1);
  CHECK(series_inverse(a).low() == 1);
}

TEST_CASE("inverse is a two-sided identity on random series") {
  PrecisionScope scope(40);
  std::mt19937_64 rng(99);
  const Real tol("1e-30");
  for (int trial = 0; trial < 200; ++trial) {
    const int low = static_cast<int>(rng() % 7) - 3;
    const int len = 1 + static_cast<int>(rng() % 8);
    const auto a = random_series(rng, low, len);
    const auto inv = series_inverse(a);
    CAPTURE(low);
    CAPTURE(len);
    CHECK(is_unit(series_mul(a, inv), tol));
    CHECK(is_unit(series_mul(inv, a), tol));
  }
}

TEST_CASE("powers") {
  PrecisionScope scope(40);
  std::mt19937_64 rng(5);
  const auto a = random_series(rng, -1, 6);
  CHECK(is_unit(series_pow(a, 0), Real("1e-35")));
  const auto cube = series_mul(series_mul(a, a), a);
  const auto p3 = series_pow(a, 3);
  CHECK(p3.low() == cube.low());
  CHECK(p3.order() == cube.order());
  for (int k = p3.low(); k <= p3.order(); ++k) CHECK(abs(p3.coefficient(k) - cube.coefficient(k)) < Real("1e-30"));
  CHECK(is_unit(series_mul(series_pow(a, -2), series_pow(a, 2)), Real("1e-30")));
  const auto s = series_scale(a, Real(2));
  CHECK(s.coefficient(0) == 2 * a.coefficient(0));
}

TEST_CASE("singular inverse") {
  PrecisionScope scope(30);
  CHECK_THROWS_AS(series_inverse(TruncatedLaurent::taylor({Real(0), Real(1)})), SingularityError);
  CHECK_THROWS_AS(series_pow(TruncatedLaurent::taylor({Real(0), Real(1)}), -1), SingularityError);
}

TEST_CASE("zeta series examples") {
  const auto bank = build_constants(40);
  PrecisionScope scope(60);
  const auto z = zeta_laurent_at_1(4, bank);
  CHECK(z.coefficient(-1) == 1);
  CHECK(z.coefficient(0) == bank.gamma[0]);
  CHECK(z.coefficient(1) == -bank.gamma[1]);
  CHECK(abs(z.coefficient(2) - bank.gamma[2] / 2) < Real("1e-45"));
  CHECK_THROWS_AS(zeta_laurent_at_1(5, bank), DomainError);

  const auto z2 = series_pow(z, 2);
  CHECK(z2.pole_order() == 2);
  CHECK(z2.coefficient(-2) == 1);
  CHECK(abs(z2.coefficient(-1) - 2 * bank.gamma[0]) < Real("1e-45"));

  const auto inv = series_inverse(zeta_2s_taylor(bank));
  CHECK(agreeing_digits(inv.coefficient(0), 6 / (bank.pi * bank.pi)) >= 40);
  CHECK(is_unit(series_mul(z, series_inverse(z)), Real("1e-45")));
}

TEST_CASE("inverse power Taylor coefficients") {
  PrecisionScope scope(30);
  // s^-2 = sum (-1)^j (j + 1) u^j
  const auto t = inverse_power_taylor(2, 4);
  for (int j = 0; j <= 4; ++j) CHECK(t.coefficient(j) == (j % 2 ? -1 : 1) * (j + 1));
  const auto t1 = inverse_power_taylor(1, 4);
  for (int j = 0; j <= 4; ++j) CHECK(t1.coefficient(j) == (j % 2 ? -1 : 1));
}
