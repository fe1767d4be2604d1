#pragma once

#include <array>
#include <string>
#include <vector>

#include "zmn/constants.hpp"
#include "zmn/series.hpp"

namespace zmn {

/// s: all subgroups (1/zeta(2s) kernel); c: cyclic subgroups (1/zeta(2s)^2).
enum class Variant { S, C };

enum class Route { Series, ClosedForm, GDeriv };

/// x * sum_{r=0}^{4} B_r (log x)^r for the kernel x^s / s^w.
/// weight_order 1 gives the plain summatory main term, 2 the log-weighted one.
struct MainTermPolynomial {
  Variant variant = Variant::S;
  int weight_order = 2;
  std::array<Real, 5> coeffs;  // B_0..B_4
  Route route = Route::Series;

  Real evaluate(const Real& x) const;
  double evaluate(double x) const;
};

/// g^{(i)}(1, x) = x * sum_l poly[i][l] (log x)^l for i = 0..4.
struct GDerivatives {
  std::array<std::vector<Real>, 5> poly;
  Real value(int i, const Real& x) const;
};

/// zeta(s) = 1/u + sum_{j<=K} (-1)^j gamma_j u^j / j!,  u = s - 1.
TruncatedLaurent zeta_laurent_at_1(int order, const ConstantsBank& bank);

/// zeta(2s - 1) around s = 1.
TruncatedLaurent zeta_shifted_laurent(const ConstantsBank& bank);

/// zeta(2s) around s = 1 (Taylor, from zeta^(j)(2)).
TruncatedLaurent zeta_2s_taylor(const ConstantsBank& bank);

/// s^-w around s = 1.
TruncatedLaurent inverse_power_taylor(int w, int order);

/// f(s) = zeta^4(s) zeta(2s - 1); pole of order 5. Requires bank.digits >= 30.
TruncatedLaurent f_laurent(const ConstantsBank& bank);

/// h(s) = s^-w zeta(2s)^-k with k = 1 for Variant::S and 2 for Variant::C.
TruncatedLaurent kernel_taylor(Variant variant, int weight_order, const ConstantsBank& bank);

/// B_j = c_{-1-j} / j! read off f(s) h(s) at s = 1.
MainTermPolynomial main_term_coefficients(Variant variant, int weight_order, const ConstantsBank& bank);

/// Explicit closed forms of B_0..B_4 for (s, weight 2) in gamma_n, pi and zeta^(j)(2).
MainTermPolynomial closed_form_B_weighted_s(const ConstantsBank& bank);

/// Closed forms of g^{(i)}(1,x) for g(s,x) = x^s s^-2 zeta(2s)^-1.
GDerivatives g_derivatives_closed(const ConstantsBank& bank);

/// g^{(i)}(1,x) from the Taylor coefficients of h by the Leibniz rule.
GDerivatives g_derivatives_series(Variant variant, int weight_order, const ConstantsBank& bank);

/// Values g^{(i)}(1, x), i = 0..4, from the closed forms.
std::array<Real, 5> g_derivatives(const Real& x, const ConstantsBank& bank);

/// B_r assembled as sum_k a_{-k} g^{(k-1)}(1,x)/(k-1)!, a_{-k} from f_laurent.
/// (s, 2) uses the closed-form g; other kernels use the Leibniz route.
MainTermPolynomial main_term_via_g(Variant variant, int weight_order, const ConstantsBank& bank);

/// Res_{s=1} f(s) g(s,x) through the closed-form g.
Real residue_via_g(const Real& x, const ConstantsBank& bank);

/// Dispatch by route. ClosedForm exists only for (s, 2).
MainTermPolynomial main_term(Variant variant, int weight_order, Route route, const ConstantsBank& bank);

std::string to_string(Variant v);
std::string to_string(Route r);

}  // namespace zmn
