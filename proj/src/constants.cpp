#include "zmn/constants.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "zmn/errors.hpp"

namespace zmn {

namespace {

using Rational = boost::multiprecision::mpq_rational;

// Exact B_{2k}, grown on demand by the Akiyama-Tanigawa recurrence.
const Rational& bernoulli_rational(int k) {
  static std::mutex mutex;
  static std::vector<Rational> cache;  // cache[k] = B_{2k}
  std::lock_guard lock(mutex);
  if (k >= static_cast<int>(cache.size())) {
    const int top = 2 * std::max(k, 2 * static_cast<int>(cache.size()) + 8);
    std::vector<Rational> row(top + 1);
    std::vector<Rational> all(top + 1);
    for (int m = 0; m <= top; ++m) {
      row[m] = Rational(1, m + 1);
      for (int j = m; j >= 1; --j) row[j - 1] = j * (row[j - 1] - row[j]);
      all[m] = row[0];
    }
    cache.clear();
    for (int i = 0; 2 * i <= top; ++i) cache.push_back(all[2 * i]);
  }
  return cache[k];
}

void check_digits(int digits) {
  if (digits < kMinDigits) throw DomainError("precision must be at least 15 digits, got " + std::to_string(digits));
}

void check_index(int n, const char* what) {
  if (n < 0 || n > 4) throw DomainError(std::string(what) + ": index must be in 0..4, got " + std::to_string(n));
}

Real tolerance_for(int working_digits) { return pow(Real(10), -working_digits); }

// I(sigma, i) = int_N^inf x^-sigma (log x)^i dx, sigma > 1.
Real log_power_tail_integral(const Real& sigma, int i, const Real& log_n) {
  const Real s1 = sigma - 1;
  Real sum = 0;
  Real factorial_ratio = 1;  // i!/l!
  Real log_pow = 1;
  std::vector<Real> terms(i + 1);
  for (int l = i; l >= 0; --l) {
    if (l < i) factorial_ratio *= (l + 1);
    terms[l] = factorial_ratio / pow(s1, i - l + 1);
  }
  for (int l = 0; l <= i; ++l) {
    sum += terms[l] * log_pow;
    log_pow *= log_n;
  }
  return exp(-s1 * log_n) * sum;
}

// Euler-Maclaurin tail correction for f(x) = x^-a (log x)^n at x = N:
//   f(N)/2 - sum_{j=1}^{M} B_{2j}/(2j)! f^{(2j-1)}(N)
// with M the first index whose remainder bound
//   |B_{2M}|/(2M)! int_N^inf |f^{(2M)}|  <=  4 (2 pi)^{-2M} sum_i |q_i| I(a+2M, i)
// falls below tol. Empty when the bound stops decreasing first.
std::optional<Real> em_correction(const Real& a, int n, std::int64_t big_n, const Real& tol) {
  const Real log_n = log(Real(big_n));
  const Real two_pi = 2 * pi_real();
  // f^{(r)}(x) = x^{-a-r} sum_i q_i (log x)^i
  std::vector<Real> q(n + 1, Real(0));
  q[n] = 1;
  Real power = exp(-a * log_n);  // N^{-a-r}
  auto poly_at = [&](const std::vector<Real>& c) {
    Real v = 0;
    for (int i = n; i >= 0; --i) v = v * log_n + c[i];
    return v;
  };
  Real result = power * poly_at(q) / 2;
  Real factorial = 1;  // (2j)!
  Real previous_bound = -1;
  for (int r = 0;; ++r) {
    // differentiate: q_i <- (i+1) q_{i+1} - (a+r) q_i
    std::vector<Real> next(n + 1);
    for (int i = 0; i <= n; ++i) next[i] = (i < n ? Real((i + 1) * q[i + 1]) : Real(0)) - (a + r) * q[i];
    q.swap(next);
    power /= big_n;
    const int order = r + 1;
    if (order % 2 == 1) {
      const int j = (order + 1) / 2;
      factorial *= (2 * j - 1) * (2 * j);
      result -= bernoulli_b2n(j) / factorial * power * poly_at(q);
    } else {
      Real bound = 0;
      for (int i = 0; i <= n; ++i) bound += abs(q[i]) * log_power_tail_integral(a + order, i, log_n);
      bound *= 4 / pow(two_pi, order);
      if (bound <= tol) return result;
      if (previous_bound >= 0 && bound >= previous_bound) return std::nullopt;
      previous_bound = bound;
    }
  }
}

// Repeats `attempt(N)` with N doubling until the Euler-Maclaurin bound is met.
template <class Attempt>
Real with_adaptive_cutoff(std::int64_t start, Attempt attempt) {
  for (std::int64_t big_n = start; big_n < (std::int64_t{1} << 24); big_n *= 2)
    if (auto value = attempt(big_n)) return *value;
  throw PrecisionError("Euler-Maclaurin: no admissible cutoff found");
}

// Minimal complex arithmetic over Real for the contour route.
struct Complex {
  Real re;
  Real im;
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Complex operator/(const Complex& o) const {
    const Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Real norm() const { return sqrt(re * re + im * im); }
};

// e^{-s log k}
Complex power_neg(const Complex& s, const Real& log_k) {
  const Real mag = exp(-s.re * log_k);
  const Real angle = s.im * log_k;
  return {mag * cos(angle), -mag * sin(angle)};
}

// zeta(s) - 1/(s-1) for complex s != 1 with Re s >= 0, |s| small.
std::optional<Complex> zeta_minus_pole(const Complex& s, std::int64_t big_n, const std::vector<Real>& logs,
                                       const Real& tol) {
  const Real two_pi = 2 * pi_real();
  Complex sum{Real(0), Real(0)};
  for (std::int64_t k = 1; k < big_n; ++k) sum = sum + power_neg(s, logs[k]);
  const Real log_n = logs[big_n];
  const Complex one{Real(1), Real(0)};
  const Complex s_minus_1 = s - one;
  const Complex n_pow = power_neg(s, log_n);  // N^{-s}
  const Complex big_n_c{Real(big_n), Real(0)};
  sum = sum + (n_pow * big_n_c - one) / s_minus_1;
  sum = sum + Complex{n_pow.re / 2, n_pow.im / 2};

  // Terms B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}; rising factorial tracked incrementally.
  Complex rising = s;  // (s)_1
  Complex n_term = n_pow * big_n_c;
  Real factorial = 1;
  Real previous_bound = -1;
  const Real inv_n2 = Real(1) / (Real(big_n) * big_n);
  for (int j = 1;; ++j) {
    n_term = Complex{n_term.re * inv_n2, n_term.im * inv_n2};
    factorial *= (2 * j - 1) * (2 * j);
    const Real coef = bernoulli_b2n(j) / factorial;
    const Complex t = rising * n_term;
    sum = sum + Complex{coef * t.re, coef * t.im};
    // (s)_{2j} for the remainder bound, then advance to (s)_{2j+1}.
    const Complex rising_even = rising * (s + Complex{Real(2 * j - 1), Real(0)});
    const Real sigma = s.re + 2 * j - 1;
    const Real bound = 4 / pow(two_pi, 2 * j) * rising_even.norm() * exp(-sigma * log_n) / sigma;
    if (bound <= tol) return sum;
    if (previous_bound >= 0 && bound >= previous_bound) return std::nullopt;
    previous_bound = bound;
    rising = rising_even * (s + Complex{Real(2 * j), Real(0)});
  }
}

}  // namespace

Real bernoulli_b2n(int k) {
  const Rational& b = bernoulli_rational(k);
  Real num(boost::multiprecision::numerator(b).str());
  Real den(boost::multiprecision::denominator(b).str());
  return num / den;
}

Real stieltjes_euler_maclaurin(int n, int digits) {
  check_index(n, "stieltjes");
  check_digits(digits);
  const int working = digits + kGuardDigits;
  PrecisionScope scope(working);
  const Real tol = tolerance_for(working);
  return with_adaptive_cutoff(std::max<std::int64_t>(16, digits), [&](std::int64_t big_n) -> std::optional<Real> {
    auto correction = em_correction(Real(1), n, big_n, tol);
    if (!correction) return std::nullopt;
    Real sum = 0;
    for (std::int64_t k = 2; k < big_n; ++k) sum += pow(log(Real(k)), n) / k;
    if (n == 0) sum += 1;
    const Real log_n = log(Real(big_n));
    return sum - pow(log_n, n + 1) / (n + 1) + *correction;
  });
}

std::array<Real, 5> stieltjes_contour(int digits) {
  check_digits(digits);
  const int working = digits + kGuardDigits;
  PrecisionScope scope(working);
  const Real tol = tolerance_for(working + 2);
  const Real two_pi = 2 * pi_real();

  // |gamma_m| <= 2 (m-1)!/pi^m bounds the aliased coefficients by 2/pi^P.
  const int nodes = static_cast<int>(std::ceil(working * std::log(10.0) / std::log(M_PI))) + 8;

  for (std::int64_t big_n = std::max(32, working); big_n < (1 << 16); big_n *= 2) {
    std::vector<Real> logs(big_n + 1);
    for (std::int64_t k = 1; k <= big_n; ++k) logs[k] = log(Real(k));
    std::array<Real, 5> acc;
    for (auto& a : acc) a = 0;
    bool ok = true;
    for (int p = 0; p < nodes && ok; ++p) {
      const Real theta = two_pi * p / nodes;
      const Real c = cos(theta);
      const Real s = sin(theta);
      auto value = zeta_minus_pole(Complex{1 + c, s}, big_n, logs, tol);
      if (!value) {
        ok = false;
        break;
      }
      // a_k += F(s_p) e^{-i k theta}; only the real part survives the symmetric sum.
      for (int k = 0; k <= 4; ++k) {
        const Real angle = k * theta;
        acc[k] += value->re * cos(angle) + value->im * sin(angle);
      }
    }
    if (!ok) continue;
    std::array<Real, 5> gamma;
    Real factorial = 1;
    for (int k = 0; k <= 4; ++k) {
      if (k > 0) factorial *= k;
      const Real a_k = acc[k] / nodes;
      gamma[k] = (k % 2 == 0 ? a_k : -a_k) * factorial;
    }
    return gamma;
  }
  throw PrecisionError("stieltjes_contour: no admissible cutoff found");
}

Real stieltjes(int n, int digits) {
  check_index(n, "stieltjes");
  check_digits(digits);
  const Real em = stieltjes_euler_maclaurin(n, digits);
  const auto contour = stieltjes_contour(digits);
  PrecisionScope scope(digits + kGuardDigits);
  if (agreeing_digits(em, contour[n]) < digits - 5)
    throw PrecisionError("stieltjes: Euler-Maclaurin and contour routes disagree for gamma_" + std::to_string(n));
  return em;
}

Real zeta_deriv_at_2(int j, int digits) {
  check_index(j, "zeta_deriv_at_2");
  check_digits(digits);
  const int working = digits + kGuardDigits;
  PrecisionScope scope(working);
  const Real tol = tolerance_for(working);
  const Real value = with_adaptive_cutoff(std::max<std::int64_t>(16, digits), [&](std::int64_t big_n) -> std::optional<Real> {
    auto correction = em_correction(Real(2), j, big_n, tol);
    if (!correction) return std::nullopt;
    Real sum = 0;
    for (std::int64_t k = 2; k < big_n; ++k) sum += pow(log(Real(k)), j) / (Real(k) * k);
    if (j == 0) sum += 1;
    const Real log_n = log(Real(big_n));
    return sum + log_power_tail_integral(Real(2), j, log_n) + *correction;
  });
  return j % 2 == 0 ? value : Real(-value);
}

Real zeta_real(const Real& s, int digits) {
  check_digits(digits);
  if (s <= 1) throw DomainError("zeta_real: s must exceed 1");
  const int working = digits + kGuardDigits;
  PrecisionScope scope(working);
  const Real tol = tolerance_for(working);
  const Real sw(s);
  return with_adaptive_cutoff(std::max<std::int64_t>(16, digits), [&](std::int64_t big_n) -> std::optional<Real> {
    auto correction = em_correction(sw, 0, big_n, tol);
    if (!correction) return std::nullopt;
    Real sum = 0;
    for (std::int64_t k = 1; k < big_n; ++k) sum += exp(-sw * log(Real(k)));
    return sum + exp((1 - sw) * log(Real(big_n))) / (sw - 1) + *correction;
  });
}

ConstantsBank build_constants(int digits) {
  check_digits(digits);
  ConstantsBank bank;
  bank.digits = digits;
  const auto contour = stieltjes_contour(digits);
  for (int n = 0; n <= 4; ++n) {
    bank.gamma[n] = stieltjes_euler_maclaurin(n, digits);
    bank.zeta2_derivs[n] = zeta_deriv_at_2(n, digits);
  }
  PrecisionScope scope(digits + kGuardDigits);
  bank.pi = pi_real();
  for (int n = 0; n <= 4; ++n) {
    bank.gamma_contour[n] = contour[n];
    bank.gamma_agreement[n] = agreeing_digits(bank.gamma[n], contour[n]);
    if (bank.gamma_agreement[n] < digits - 5)
      throw PrecisionError("build_constants: gamma_" + std::to_string(n) + " routes agree to only " +
                           std::to_string(bank.gamma_agreement[n]) + " digits");
  }
  if (!(bank.zeta2_derivs[1] < 0) || !(bank.zeta2_derivs[2] > 0))
    throw PrecisionError("build_constants: sign check on zeta'(2), zeta''(2) failed");
  return bank;
}

}  // namespace zmn
