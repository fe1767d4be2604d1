#include "zmn/residue.hpp"

#include <cmath>

#include "zmn/errors.hpp"

namespace zmn {

namespace {

void check_weight(int w) {
  if (w != 1 && w != 2) throw DomainError("weight order must be 1 or 2, got " + std::to_string(w));
}

PrecisionScope bank_scope(const ConstantsBank& bank) { return PrecisionScope(bank.digits + kGuardDigits); }

Real factorial(int n) {
  Real f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Real binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

Real MainTermPolynomial::evaluate(const Real& x) const {
  const Real log_x = log(x);
  Real acc = 0;
  for (int r = 4; r >= 0; --r) acc = acc * log_x + coeffs[r];
  return x * acc;
}

double MainTermPolynomial::evaluate(double x) const {
  PrecisionScope scope(static_cast<unsigned>(coeffs[4].precision()));
  return static_cast<double>(evaluate(Real(x)));
}

Real GDerivatives::value(int i, const Real& x) const {
  if (i < 0 || i > 4) throw DomainError("g derivative index must be in 0..4");
  const Real log_x = log(x);
  Real acc = 0;
  for (int l = static_cast<int>(poly[i].size()) - 1; l >= 0; --l) acc = acc * log_x + poly[i][l];
  return x * acc;
}

TruncatedLaurent zeta_laurent_at_1(int order, const ConstantsBank& bank) {
  if (order < 0 || order > 4) throw DomainError("zeta_laurent_at_1: unsupported order " + std::to_string(order));
  auto scope = bank_scope(bank);
  std::vector<Real> c{Real(1)};
  for (int j = 0; j <= order; ++j) {
    const Real term = bank.gamma[j] / factorial(j);
    c.push_back(j % 2 == 0 ? term : Real(-term));
  }
  return {-1, std::move(c)};
}

TruncatedLaurent zeta_shifted_laurent(const ConstantsBank& bank) {
  // zeta(1 + 2u) = 1/(2u) + sum_j (-1)^j gamma_j (2u)^j / j!
  auto scope = bank_scope(bank);
  std::vector<Real> c{Real(1) / 2};
  Real two_pow = 1;
  for (int j = 0; j <= 4; ++j) {
    const Real term = bank.gamma[j] * two_pow / factorial(j);
    c.push_back(j % 2 == 0 ? term : Real(-term));
    two_pow *= 2;
  }
  return {-1, std::move(c)};
}

TruncatedLaurent zeta_2s_taylor(const ConstantsBank& bank) {
  auto scope = bank_scope(bank);
  std::vector<Real> c;
  Real two_pow = 1;
  for (int j = 0; j <= 4; ++j) {
    c.push_back(bank.zeta2_derivs[j] * two_pow / factorial(j));
    two_pow *= 2;
  }
  return TruncatedLaurent::taylor(std::move(c));
}

TruncatedLaurent inverse_power_taylor(int w, int order) {
  if (w < 0) throw DomainError("inverse_power_taylor: negative power");
  std::vector<Real> c;
  for (int j = 0; j <= order; ++j) {
    const Real b = binomial(w - 1 + j, j);
    c.push_back(j % 2 == 0 ? b : Real(-b));
  }
  if (w == 0) {
    c.assign(order + 1, Real(0));
    c[0] = 1;
  }
  return TruncatedLaurent::taylor(std::move(c));
}

TruncatedLaurent f_laurent(const ConstantsBank& bank) {
  if (bank.digits < 30) throw PrecisionError("f_laurent: bank precision below 30 digits");
  auto scope = bank_scope(bank);
  const auto zeta = zeta_laurent_at_1(4, bank);
  return series_mul(series_pow(zeta, 4), zeta_shifted_laurent(bank));
}

TruncatedLaurent kernel_taylor(Variant variant, int weight_order, const ConstantsBank& bank) {
  check_weight(weight_order);
  auto scope = bank_scope(bank);
  const int k = variant == Variant::S ? 1 : 2;
  return series_mul(inverse_power_taylor(weight_order, 4), series_pow(zeta_2s_taylor(bank), -k));
}

MainTermPolynomial main_term_coefficients(Variant variant, int weight_order, const ConstantsBank& bank) {
  check_weight(weight_order);
  auto scope = bank_scope(bank);
  const auto full = series_mul(f_laurent(bank), kernel_taylor(variant, weight_order, bank));
  MainTermPolynomial p{variant, weight_order, {}, Route::Series};
  for (int j = 0; j <= 4; ++j) p.coeffs[j] = full.coefficient(-1 - j) / factorial(j);
  return p;
}

MainTermPolynomial closed_form_B_weighted_s(const ConstantsBank& bank) {
  auto scope = bank_scope(bank);
  const Real& g0 = bank.gamma[0];
  const Real& g1 = bank.gamma[1];
  const Real& g2 = bank.gamma[2];
  const Real& g3 = bank.gamma[3];
  const Real& z1 = bank.zeta2_derivs[1];
  const Real& z2 = bank.zeta2_derivs[2];
  const Real& z3 = bank.zeta2_derivs[3];
  const Real& z4 = bank.zeta2_derivs[4];
  const Real p2 = bank.pi * bank.pi;
  const Real p4 = p2 * p2;
  const Real p6 = p4 * p2;
  const Real p8 = p4 * p4;
  const Real p10 = p8 * p2;

  MainTermPolynomial p{Variant::S, 2, {}, Route::ClosedForm};
  p.coeffs[4] = 1 / (8 * p2);
  p.coeffs[3] = (3 * g0 - 1) / p2 - 6 / p4 * z1;
  p.coeffs[2] = -18 / p4 * z2 + 216 / p6 * z1 * z1 + 36 / p4 * (-3 * g0 + 1) * z1 +
                3 / (2 * p2) * (3 + 14 * g0 * g0 - 12 * g0 - 8 * g1);
  p.coeffs[1] = -5184 / p8 * z1 * z1 * z1 + 864 / p6 * z1 * (-z1 + 3 * g0 * z1 + z2) -
                12 / p4 * (42 * g0 * g0 * z1 + z1 * (9 - 24 * g1) - 6 * z2 + 18 * g0 * (-2 * z1 + z2) + 2 * z3) +
                6 / p2 * (8 * g0 * g0 * g0 - 14 * g0 * g0 + 9 * g0 - 18 * g0 * g1 + 8 * g1 + 3 * g2 - 2);

  const Real g0_2 = g0 * g0;
  const Real g0_3 = g0_2 * g0;
  const Real g0_4 = g0_3 * g0;
  const Real z1_2 = z1 * z1;
  Real b0 = 1 / p2 * (15 - 96 * g0_3 + 27 * g0_4 - 72 * g1 + 66 * g1 * g1 - 18 * g0_2 * (-7 + 10 * g1) - 36 * g2);
  b0 += 1 / p2 * (6 * g0 * (-12 + 36 * g1 + 13 * g2) - 10 * g3);
  b0 -= 5184 / p8 * z1_2 * (-2 * z1 + 6 * g0 * z1 + 3 * z2);
  b0 -= 12 / p4 *
        (48 * g0_3 * z1 + 6 * (-2 + 8 * g1 + 3 * g2) * z1 + 9 * z2 - 24 * g1 * z2 + 42 * g0_2 * (-2 * z1 + z2));
  b0 += 12 / p4 * (6 * g0 * (9 * (-1 + 2 * g1) * z1 + 6 * z2 - 2 * z3) + 4 * z3 - z4);
  b0 += 144 / p6 * (42 * g0_2 * z1_2 + (9 - 24 * g1) * z1_2 - 36 * g0 * z1 * (z1 - z2) + 3 * z2 * z2);
  b0 += 144 / p6 * (4 * z1 * (-3 * z2 + z3));
  b0 += 62208 / p10 * z1_2 * z1_2;
  p.coeffs[0] = b0;
  return p;
}

GDerivatives g_derivatives_closed(const ConstantsBank& bank) {
  auto scope = bank_scope(bank);
  const Real& z1 = bank.zeta2_derivs[1];
  const Real& z2 = bank.zeta2_derivs[2];
  const Real& z3 = bank.zeta2_derivs[3];
  const Real& z4 = bank.zeta2_derivs[4];
  const Real p2 = bank.pi * bank.pi;
  const Real p4 = p2 * p2;
  const Real p6 = p4 * p2;
  const Real p8 = p4 * p4;
  const Real p10 = p8 * p2;
  const Real z1_2 = z1 * z1;
  const Real lead = 6 / p2;

  GDerivatives g;
  g.poly[0] = {1 / bank.zeta2_derivs[0]};
  g.poly[1] = {-12 / p4 * (6 * z1 + p2), lead};
  g.poly[2] = {36 / p6 * (48 * z1_2 + 4 * p2 * (2 * z1 - z2) + p4), -24 / p4 * (6 * z1 + p2), lead};
  g.poly[3] = {-144 / p8 * (432 * z1_2 * z1 + 72 * p2 * z1 * (z1 - z2) + p6) - 144 / p4 * (9 * z1 - 6 * z2 + 2 * z3),
               108 / p6 * (48 * z1_2 + 4 * p2 * (2 * z1 - z2) + p4), -36 / p4 * (6 * z1 + p2), lead};
  g.poly[4] = {
      144 / p10 * (20736 * z1_2 * z1_2 + 1728 * p2 * z1_2 * (2 * z1 - 3 * z2) + 5 * p8) +
          6912 / p6 * (3 * z2 * z2 + 9 * z1_2 - 4 * z1 * (3 * z2 - z3)) +
          576 / p4 * (-z4 + 4 * z3 - 9 * z2 + 12 * z1),
      576 / p8 * (-432 * z1_2 * z1 + 72 * p2 * z1 * z2 - 72 * p2 * z1_2 - p6) + 576 / p4 * (-2 * z3 - 9 * z1 + 6 * z2),
      216 / p6 * (-4 * p2 * z2 + 48 * z1_2 + 8 * p2 * z1 + p4),
      -48 / p4 * (p2 + 6 * z1),
      lead};
  return g;
}

GDerivatives g_derivatives_series(Variant variant, int weight_order, const ConstantsBank& bank) {
  auto scope = bank_scope(bank);
  const auto h = kernel_taylor(variant, weight_order, bank);
  GDerivatives g;
  for (int i = 0; i <= 4; ++i) {
    g.poly[i].resize(i + 1);
    for (int a = 0; a <= i; ++a) g.poly[i][a] = binomial(i, a) * factorial(i - a) * h.coefficient(i - a);
  }
  return g;
}

std::array<Real, 5> g_derivatives(const Real& x, const ConstantsBank& bank) {
  if (x <= 1) throw DomainError("g_derivatives: x must exceed 1");
  auto scope = bank_scope(bank);
  const auto g = g_derivatives_closed(bank);
  std::array<Real, 5> values;
  for (int i = 0; i <= 4; ++i) values[i] = g.value(i, Real(x));
  return values;
}

MainTermPolynomial main_term_via_g(Variant variant, int weight_order, const ConstantsBank& bank) {
  check_weight(weight_order);
  auto scope = bank_scope(bank);
  const auto f = f_laurent(bank);
  const auto g = (variant == Variant::S && weight_order == 2) ? g_derivatives_closed(bank)
                                                               : g_derivatives_series(variant, weight_order, bank);
  MainTermPolynomial p{variant, weight_order, {}, Route::GDeriv};
  for (auto& c : p.coeffs) c = 0;
  for (int k = 1; k <= 5; ++k) {
    const Real weight = f.coefficient(-k) / factorial(k - 1);
    for (std::size_t l = 0; l < g.poly[k - 1].size(); ++l) p.coeffs[l] += weight * g.poly[k - 1][l];
  }
  return p;
}

Real residue_via_g(const Real& x, const ConstantsBank& bank) {
  if (x < 1) throw DomainError("residue_via_g: x must be >= 1");
  auto scope = bank_scope(bank);
  const auto f = f_laurent(bank);
  const auto g = g_derivatives_closed(bank);
  const Real xs(x);
  Real r = 0;
  for (int k = 1; k <= 5; ++k) r += f.coefficient(-k) * g.value(k - 1, xs) / factorial(k - 1);
  return r;
}

MainTermPolynomial main_term(Variant variant, int weight_order, Route route, const ConstantsBank& bank) {
  switch (route) {
    case Route::Series: return main_term_coefficients(variant, weight_order, bank);
    case Route::GDeriv: return main_term_via_g(variant, weight_order, bank);
    case Route::ClosedForm:
      if (variant != Variant::S || weight_order != 2)
        throw DomainError("closed-form route exists only for variant s with weight order 2");
      return closed_form_B_weighted_s(bank);
  }
  throw DomainError("unknown route");
}

std::string to_string(Variant v) { return v == Variant::S ? "s" : "c"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::Series: return "series";
    case Route::ClosedForm: return "closedform";
    case Route::GDeriv: return "gderiv";
  }
  return "?";
}

}  // namespace zmn
