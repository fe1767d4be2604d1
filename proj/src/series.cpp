#include "zmn/series.hpp"

#include <algorithm>
#include <string>

#include "zmn/errors.hpp"

namespace zmn {

TruncatedLaurent::TruncatedLaurent(int low, std::vector<Real> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("TruncatedLaurent: empty coefficient list");
}

TruncatedLaurent TruncatedLaurent::unit(int order) {
  if (order < 0) throw DomainError("TruncatedLaurent::unit: negative order");
  std::vector<Real> c(order + 1, Real(0));
  c[0] = 1;
  return {0, std::move(c)};
}

Real TruncatedLaurent::coefficient(int power) const {
  if (power < low_) return Real(0);
  if (power > order())
    throw DomainError("coefficient u^" + std::to_string(power) + " beyond truncation order " +
                      std::to_string(order()));
  return coeffs_[power - low_];
}

TruncatedLaurent TruncatedLaurent::truncated(int new_order) const {
  if (new_order > order() || new_order < low_) throw DomainError("truncated: order out of range");
  return {low_, std::vector<Real>(coeffs_.begin(), coeffs_.begin() + (new_order - low_ + 1))};
}

TruncatedLaurent series_mul(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  const int low = a.low() + b.low();
  const int order = std::min(a.order() + b.low(), b.order() + a.low());
  std::vector<Real> c(order - low + 1, Real(0));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= i && j < ac.size(); ++j)
      if (i - j < bc.size()) c[i] += ac[j] * bc[i - j];
  return {low, std::move(c)};
}

TruncatedLaurent series_inverse(const TruncatedLaurent& a) {
  const auto& ac = a.coeffs();
  if (ac[0] == 0) throw SingularityError("series_inverse: leading coefficient is zero");
  // a = u^low (c0 + c1 u + ...): invert the bracket term by term.
  const std::size_t len = ac.size();
  std::vector<Real> inv(len, Real(0));
  inv[0] = 1 / ac[0];
  for (std::size_t k = 1; k < len; ++k) {
    Real s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += ac[j] * inv[k - j];
    inv[k] = -s * inv[0];
  }
  return {-a.low(), std::move(inv)};
}

TruncatedLaurent series_pow(const TruncatedLaurent& a, int k) {
  if (k < 0) return series_pow(series_inverse(a), -k);
  if (k == 0) return TruncatedLaurent::unit(a.order() - a.low());
  TruncatedLaurent result = a;
  for (int i = 1; i < k; ++i) result = series_mul(result, a);
  return result;
}

TruncatedLaurent series_scale(const TruncatedLaurent& a, const Real& factor) {
  std::vector<Real> c = a.coeffs();
  for (auto& x : c) x *= factor;
  return {a.low(), std::move(c)};
}

}  // namespace zmn
