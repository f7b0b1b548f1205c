#pragma once

// Floating-point values with a running error estimate, evaluation settings,
// and coefficient lists in T and in t.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

template <class Real>
Real abs_value(const Real& v) {
  using std::abs;
  return abs(v);
}

/// A value together with a non-negative error estimate. Sums add errors,
/// products propagate them to first order.
template <class Real = double>
struct numeric_value {
  Real value = 0;
  Real err = 0;

  numeric_value() = default;
  numeric_value(Real v, Real e = 0) : value(v), err(e) {}  // NOLINT

  numeric_value& operator+=(const numeric_value& o) {
    value += o.value;
    err += o.err;
    return *this;
  }
  numeric_value& operator-=(const numeric_value& o) {
    value -= o.value;
    err += o.err;
    return *this;
  }
  friend numeric_value operator+(numeric_value a, const numeric_value& b) { return a += b; }
  friend numeric_value operator-(numeric_value a, const numeric_value& b) { return a -= b; }
  friend numeric_value operator-(const numeric_value& a) { return {-a.value, a.err}; }
  friend numeric_value operator*(const numeric_value& a, const numeric_value& b) {
    return {a.value * b.value, abs_value(a.value) * b.err + abs_value(b.value) * a.err + a.err * b.err};
  }
  friend numeric_value operator*(const Real& s, const numeric_value& a) { return {s * a.value, abs_value(s) * a.err}; }
};

struct EvalConfig {
  /// Cap on the outer summation variable.
  long N = 1'000'000;
  /// Target number of significant digits; the series are truncated once terms drop below 10^-(digits+2).
  int digits = 15;
  /// Comparison tolerance added to the propagated error estimate.
  double tol = 1e-5;

  void validate() const {
    if (N < 2) throw std::invalid_argument("cutoff N must be at least 2");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (digits < 1) throw std::invalid_argument("digits must be positive");
  }
};

/// Polynomial in T with numeric coefficients, lowest degree first.
template <class Real = double>
struct NumericPolyT {
  std::vector<numeric_value<Real>> coefficients;

  std::size_t size() const { return coefficients.size(); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  numeric_value<Real> operator[](std::size_t n) const { return n < size() ? coefficients[n] : numeric_value<Real>{}; }
  numeric_value<Real>& at_degree(std::size_t n) {
    if (n >= size()) coefficients.resize(n + 1);
    return coefficients[n];
  }
  /// Value at T = t.
  numeric_value<Real> at(const Real& t) const {
    numeric_value<Real> r;
    for (std::size_t n = size(); n-- > 0;) r = numeric_value<Real>(t) * r + coefficients[n];
    return r;
  }
};

/// Truncated series in t with numeric coefficients.
template <class Real = double>
struct NumericSeries {
  std::vector<numeric_value<Real>> coefficients;

  explicit NumericSeries(int order = 0) : coefficients(static_cast<std::size_t>(order) + 1) {}
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  numeric_value<Real>& operator[](int n) { return coefficients[static_cast<std::size_t>(n)]; }
  const numeric_value<Real>& operator[](int n) const { return coefficients[static_cast<std::size_t>(n)]; }

  void add(int n, const numeric_value<Real>& v, const Real& c = 1) {
    if (n <= order()) (*this)[n] += c * v;
  }
  void add_shifted(const NumericSeries& s, int shift, const Real& c = 1) {
    for (int n = 0; n <= s.order() && n + shift <= order(); ++n) add(n + shift, s[n], c);
  }
};

/// |a - b| per coefficient, the tolerance test used by every numeric check.
template <class Real>
bool within(const numeric_value<Real>& a, const numeric_value<Real>& b, double tol, double* residual = nullptr) {
  Real d = abs_value(Real(a.value - b.value));
  if (residual) *residual = static_cast<double>(d);
  return d <= Real(tol) + a.err + b.err;
}

}  // namespace mzv
