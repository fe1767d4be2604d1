#pragma once

#include <array>
#include <cstdint>

#include "zmn/real.hpp"

namespace zmn {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 15;
/// Extra decimal digits carried internally beyond what the caller requests.
inline constexpr int kGuardDigits = 15;

/// Stieltjes constants gamma_0..gamma_4 and zeta^(j)(2), j = 0..4, at a
/// common working precision. Immutable once built.
struct ConstantsBank {
  int digits = kDefaultDigits;
  Real pi;
  std::array<Real, 5> gamma;
  std::array<Real, 5> zeta2_derivs;
  /// The same constants from the contour-integral route, kept for audit.
  std::array<Real, 5> gamma_contour;
  /// Decimal digits on which the two gamma routes agree.
  std::array<double, 5> gamma_agreement{};
};

/// Builds the bank at `digits` significant digits. Throws PrecisionError if
/// the two Stieltjes routes disagree beyond digits - 5 or a sign check fails.
ConstantsBank build_constants(int digits = kDefaultDigits);

/// gamma_n by Euler-Maclaurin, cross-checked against the contour route.
Real stieltjes(int n, int digits);

/// gamma_n = lim_N [sum_{k<=N} (log k)^n / k - (log N)^{n+1}/(n+1)], with the
/// tail supplied by Euler-Maclaurin under a rigorous remainder bound.
Real stieltjes_euler_maclaurin(int n, int digits);

/// gamma_0..gamma_4 from the Taylor coefficients of zeta(s) - 1/(s-1) at s = 1,
/// obtained by the trapezoidal rule on the circle |s - 1| = 1. zeta at the
/// complex nodes comes from its own Euler-Maclaurin evaluation.
std::array<Real, 5> stieltjes_contour(int digits);

/// zeta^(j)(2) = sum_n (-log n)^j n^-2.
Real zeta_deriv_at_2(int j, int digits);

/// zeta(s) for real s > 1.
Real zeta_real(const Real& s, int digits);

/// B_{2k} as a Real at the current default precision (B_2 = 1/6, ...).
Real bernoulli_b2n(int k);

}  // namespace zmn
