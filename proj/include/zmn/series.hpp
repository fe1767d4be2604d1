#pragma once

#include <vector>

#include "zmn/real.hpp"

namespace zmn {

/// Truncated Laurent series sum_{k=low}^{order} c_k u^k in u = s - 1.
///
/// `order` is the highest power known to be exact; arithmetic propagates it so
/// that every stored coefficient of a result is correct. pole_order() is
/// max(0, -low).
class TruncatedLaurent {
 public:
  TruncatedLaurent(int low, std::vector<Real> coeffs);

  /// 1 + 0 u + ... through u^order.
  static TruncatedLaurent unit(int order);
  /// Taylor series (low = 0) from its coefficients.
  static TruncatedLaurent taylor(std::vector<Real> coeffs) { return {0, std::move(coeffs)}; }

  int low() const { return low_; }
  int order() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int pole_order() const { return low_ < 0 ? -low_ : 0; }
  const std::vector<Real>& coeffs() const { return coeffs_; }

  /// Coefficient of u^power; zero below low(), error above order().
  Real coefficient(int power) const;

  /// Same series truncated to a lower order.
  TruncatedLaurent truncated(int new_order) const;

 private:
  int low_;
  std::vector<Real> coeffs_;
};

TruncatedLaurent series_mul(const TruncatedLaurent& a, const TruncatedLaurent& b);
/// Requires a nonzero leading coefficient (SingularityError otherwise).
TruncatedLaurent series_inverse(const TruncatedLaurent& a);
/// a^k for any integer k; negative k goes through series_inverse.
TruncatedLaurent series_pow(const TruncatedLaurent& a, int k);
TruncatedLaurent series_scale(const TruncatedLaurent& a, const Real& factor);

}  // namespace zmn
