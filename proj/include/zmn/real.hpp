#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace zmn {

/// Variable-precision binary float (MPFR). Precision is taken from the
/// enclosing PrecisionScope when a value is created.
using Real = boost::multiprecision::mpfr_float;

/// Sets the default decimal precision for newly created Real values and
/// restores the previous value on exit.
///
/// The MPFR backend keeps its default precision in a process-wide variable, so
/// a scope also holds a process-wide recursive lock: high-precision work is
/// serialized across threads, and nested scopes on the same thread are fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned digits() const { return digits_; }

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
  unsigned digits_;
};

/// pi at the current default precision.
Real pi_real();

/// Scientific notation with `digits` significant digits.
std::string format_real(const Real& x, int digits);

/// Number of leading significant decimal digits on which a and b agree,
/// measured as -log10(|a-b| / max(|a|,|b|)). Identical values give `cap`.
double agreeing_digits(const Real& a, const Real& b, double cap = 1000.0);

/// |a - b| <= tol * max(|a|, |b|).
bool relative_close(const Real& a, const Real& b, const Real& tol);

}  // namespace zmn
