#include "zmn/real.hpp"

#include <algorithm>
#include <ios>

namespace zmn {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10)
    : lock_(precision_mutex()), previous_(Real::default_precision()), digits_(digits10) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

Real pi_real() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string format_real(const Real& x, int digits) {
  // str() counts digits after the point in scientific mode
  return x.str(std::max(digits - 1, 0), std::ios_base::scientific);
}

double agreeing_digits(const Real& a, const Real& b, double cap) {
  const Real diff = abs(a - b);
  if (diff == 0) return cap;
  const Real scale = std::max(abs(a), abs(b));
  return std::min(cap, static_cast<double>(-log10(diff / scale)));
}

bool relative_close(const Real& a, const Real& b, const Real& tol) {
  return abs(a - b) <= tol * std::max(abs(a), abs(b));
}

}  // namespace zmn
