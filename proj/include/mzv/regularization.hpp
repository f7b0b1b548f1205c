#pragma once

// H^1 = H^0[y] for both products, the regularization polynomials Z^•(w; T),
// the series A(x) and the linear maps rho, rho* on polynomials in T.

#include <cmath>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/mzv_eval.hpp"
#include "mzv/numeric.hpp"
#include "mzv/posets.hpp"
#include "mzv/report.hpp"

namespace mzv {

/// y^{•n}, the n-fold product of y (that is, of z_1) with itself.
inline NcPoly y_power(int n, product op) {
  NcPoly p = NcPoly::one();
  NcPoly y(Word::parse("y"));
  for (int i = 0; i < n; ++i) p = multiply(op, p, y);
  return p;
}

namespace detail {

inline std::size_t max_trailing_y(const NcPoly& w) {
  std::size_t n = 0;
  for (const auto& [word, c] : w) n = std::max(n, word.trailing(letter::y));
  return n;
}

inline rational factorial(int n) {
  integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return rational(f);
}

}  // namespace detail

/// The unique a_0, ..., a_n in H^0 with w = sum_i a_i • y^{•i}. Each step peels
/// off the terms of highest trailing-y degree n: their stripped words P give
/// a_n = P / n!, because P • y^{•n} has top part exactly n! P y^n.
inline std::vector<NcPoly> decompose(const NcPoly& w, product op) {
  if (!w.in_h1()) throw domain_error("decompose needs an element of H^1");
  NcPoly rest = w;
  std::vector<NcPoly> a;
  while (!rest.is_zero()) {
    std::size_t n = detail::max_trailing_y(rest);
    if (a.size() < n + 1) a.resize(n + 1);
    NcPoly stripped;
    for (const auto& [word, c] : rest) {
      if (word.trailing(letter::y) == n) stripped.add(word.prefix(word.size() - n), c);
    }
    stripped *= 1 / detail::factorial(static_cast<int>(n));
    rest -= multiply(op, stripped, y_power(static_cast<int>(n), op));
    a[n] += stripped;
    if (!rest.is_zero() && detail::max_trailing_y(rest) >= n) {
      throw std::logic_error("decompose: trailing degree failed to drop");
    }
  }
  return a;
}

/// sum_i a_i • y^{•i}.
inline NcPoly recombine(const std::vector<NcPoly>& a, product op) {
  NcPoly w;
  for (std::size_t i = 0; i < a.size(); ++i) w += multiply(op, a[i], y_power(static_cast<int>(i), op));
  return w;
}

/// Z^•(w; T) = sum_i a_i T^i with admissible coefficients, kept symbolic.
struct RegPolynomial {
  std::vector<NcPoly> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  NcPoly operator[](std::size_t n) const { return n < coefficients.size() ? coefficients[n] : NcPoly{}; }
  friend bool operator==(const RegPolynomial& a, const RegPolynomial& b) {
    std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

  /// "(yyx+yxx) + (-yx)*T^1"
  std::string str() const {
    std::string out;
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
      if (coefficients[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coefficients[n].str() + ")";
      if (n > 0) out += "*T^" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
  }
};

inline RegPolynomial reg_t(const NcPoly& w, product op) {
  RegPolynomial r{decompose(w, op)};
  while (!r.coefficients.empty() && r.coefficients.back().is_zero()) r.coefficients.pop_back();
  return r;
}

/// Z^•(w; T) with every coefficient evaluated numerically.
template <class Real = double>
NumericPolyT<Real> z_reg_poly(const NcPoly& w, product op, const EvalConfig& cfg) {
  NumericPolyT<Real> p;
  RegPolynomial r = reg_t(w, op);
  for (const NcPoly& c : r.coefficients) p.coefficients.push_back(z_num<Real>(c, cfg));
  return p;
}

// ---------------------------------------------------------------------------
// A(x) and the rho maps

/// zeta(2), ..., zeta(max_deg) at positions 2..max_deg (positions 0 and 1 unused).
template <class Real = double>
std::vector<numeric_value<Real>> single_zetas(int max_deg, const EvalConfig& cfg) {
  std::vector<numeric_value<Real>> z(static_cast<std::size_t>(std::max(max_deg, 1)) + 1);
  for (int n = 2; n <= max_deg; ++n) z[static_cast<std::size_t>(n)] = mzv_num<Real>(Index{n}, false, cfg);
  return z;
}

/// Coefficients of exp(s(x)) for s with s_0 = 0, via n b_n = sum_{j=1}^n j s_j b_{n-j}.
template <class Real = double>
std::vector<numeric_value<Real>> exp_series(const std::vector<numeric_value<Real>>& s, int max_deg) {
  std::vector<numeric_value<Real>> b(static_cast<std::size_t>(max_deg) + 1);
  b[0] = Real(1);
  for (int n = 1; n <= max_deg; ++n) {
    numeric_value<Real> acc;
    for (int j = 1; j <= n && j < static_cast<int>(s.size()); ++j) {
      acc += Real(j) * (s[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)]);
    }
    b[static_cast<std::size_t>(n)] = (Real(1) / Real(n)) * acc;
  }
  return b;
}

enum class rho_map { rho, rho_inv, rho_star, rho_star_inv };

inline const char* to_string(rho_map m) {
  switch (m) {
    case rho_map::rho: return "rho";
    case rho_map::rho_inv: return "rho_inv";
    case rho_map::rho_star: return "rho_star";
    case rho_map::rho_star_inv: return "rho_star_inv";
  }
  return "?";
}

/// Series multiplying e^{Tx} for each map, as exp(sign * sum_{n>=2} c_n zeta(n)/n x^n):
/// A(x) has c_n = (-1)^n, 1/A(x) negates that, A(-x) has c_n = 1 and 1/A(-x) has c_n = -1.
template <class Real = double>
std::vector<numeric_value<Real>> rho_kernel(rho_map which, const std::vector<numeric_value<Real>>& zeta, int max_deg) {
  std::vector<numeric_value<Real>> s(static_cast<std::size_t>(max_deg) + 1);
  for (int n = 2; n <= max_deg; ++n) {
    Real c = 1 / Real(n);
    bool alternating = which == rho_map::rho || which == rho_map::rho_inv;
    if (alternating && n % 2) c = -c;
    if (which == rho_map::rho_inv || which == rho_map::rho_star) c = -c;
    s[static_cast<std::size_t>(n)] = c * zeta.at(static_cast<std::size_t>(n));
  }
  return exp_series(s, max_deg);
}

/// A(x) = exp(sum_{n>=2} (-1)^n zeta(n)/n x^n) up to x^max_deg.
template <class Real = double>
std::vector<numeric_value<Real>> a_coeffs(int max_deg, const std::vector<numeric_value<Real>>& zeta) {
  return rho_kernel(rho_map::rho, zeta, max_deg);
}

/// Linear map fixed by e^{Tx} -> K(x) e^{Tx}: T^n -> sum_j K_j n!/(n-j)! T^{n-j}.
/// `zeta` must cover degrees up to p's degree.
template <class Real = double>
NumericPolyT<Real> rho_apply(const NumericPolyT<Real>& p, rho_map which, const std::vector<numeric_value<Real>>& zeta) {
  int deg = std::max(p.degree(), 0);
  auto kernel = rho_kernel(which, zeta, deg);
  NumericPolyT<Real> out;
  out.coefficients.resize(p.size());
  for (int n = 0; n < static_cast<int>(p.size()); ++n) {
    Real falling = 1;  // n!/(n-j)!
    for (int j = 0; j <= n; ++j) {
      out.coefficients[static_cast<std::size_t>(n - j)] +=
          falling * (kernel[static_cast<std::size_t>(j)] * p.coefficients[static_cast<std::size_t>(n)]);
      falling *= Real(n - j);
    }
  }
  return out;
}

template <class Real = double>
NumericPolyT<Real> monomial(int n) {
  NumericPolyT<Real> p;
  p.at_degree(static_cast<std::size_t>(n)) = Real(1);
  return p;
}

/// rho* rho^{-1}(T^n) - T^n predicted from sin(pi x)/(pi x) = sum_j (-1)^j pi^{2j} x^{2j}/(2j+1)!:
/// the coefficient of T^{n-2j} is n!/(n-2j)! (-1)^j pi^{2j}/(2j+1)! for j >= 1, all others vanish.
template <class Real = double>
NumericPolyT<Real> sin_correction(int n) {
  using std::acos;
  Real pi = acos(Real(-1));
  NumericPolyT<Real> out;
  out.coefficients.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 1; 2 * j <= n; ++j) {
    Real c = 1;
    for (int i = 0; i < 2 * j; ++i) c *= Real(n - i);
    for (int i = 2; i <= 2 * j + 1; ++i) c /= Real(i);
    for (int i = 0; i < j; ++i) c *= -pi * pi;
    out.coefficients[static_cast<std::size_t>(n - 2 * j)] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// comparisons between the regularizations

namespace detail {

template <class Real>
void compare_polys(Report& rep, const NumericPolyT<Real>& lhs, const NumericPolyT<Real>& rhs, double tol) {
  std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    double res = 0;
    bool ok = within(lhs[i], rhs[i], tol, &res);
    rep.residuals.push_back(res);
    if (!ok) {
      rep.pass = false;
      rep.detail += "T^" + std::to_string(i) + ": residual " + std::to_string(res) + "\n";
    }
  }
}

}  // namespace detail

enum class reg_comparison {
  ikz,        // Z^sh(z_k; T) = rho(Z^*(z_k; T))
  muneta,     // Z^sh(S(z_k); T) = rho(Z^*(S(z_k); T))
  ky,         // Z^sh(w*(k); T) = rho*(Z^*(S(z_k); T))
  star_regs,  // Z^sh(w*(k); T) = rho*(rho^{-1}(Z^sh(S(z_k); T)))
};

inline const char* to_string(reg_comparison c) {
  switch (c) {
    case reg_comparison::ikz: return "ikz";
    case reg_comparison::muneta: return "muneta";
    case reg_comparison::ky: return "ky";
    case reg_comparison::star_regs: return "star-regs";
  }
  return "?";
}

template <class Real = double>
Report verify_reg_comparison(reg_comparison which, const Index& k, const EvalConfig& cfg) {
  stopwatch clock;
  Report rep;
  rep.identity = to_string(which);
  rep.index = k.str();
  rep.tolerance = cfg.tol;
  rep.pass = true;
  NcPoly zk(word_of_index(k));
  auto zeta = single_zetas<Real>(static_cast<int>(k.depth()) + 1, cfg);
  NumericPolyT<Real> lhs, rhs;
  switch (which) {
    case reg_comparison::ikz:
      lhs = z_reg_poly<Real>(zk, product::shuffle, cfg);
      rhs = rho_apply(z_reg_poly<Real>(zk, product::harmonic, cfg), rho_map::rho, zeta);
      break;
    case reg_comparison::muneta:
      lhs = z_reg_poly<Real>(s_map(zk), product::shuffle, cfg);
      rhs = rho_apply(z_reg_poly<Real>(s_map(zk), product::harmonic, cfg), rho_map::rho, zeta);
      break;
    case reg_comparison::ky:
      lhs = z_reg_poly<Real>(w_star(k), product::shuffle, cfg);
      rhs = rho_apply(z_reg_poly<Real>(s_map(zk), product::harmonic, cfg), rho_map::rho_star, zeta);
      break;
    case reg_comparison::star_regs: {
      lhs = z_reg_poly<Real>(w_star(k), product::shuffle, cfg);
      auto inner = rho_apply(z_reg_poly<Real>(s_map(zk), product::shuffle, cfg), rho_map::rho_inv, zeta);
      rhs = rho_apply(inner, rho_map::rho_star, zeta);
      break;
    }
  }
  detail::compare_polys(rep, lhs, rhs, cfg.tol);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// The star-regularization comparison plus the explicit correction rho* rho^{-1}(T^n) - T^n
/// for every degree present, checked against the sin-series prediction.
template <class Real = double>
Report compare_star_regs(const Index& k, const EvalConfig& cfg) {
  stopwatch clock;
  Report rep = verify_reg_comparison<Real>(reg_comparison::star_regs, k, cfg);
  int deg = static_cast<int>(k.depth());
  auto zeta = single_zetas<Real>(deg + 1, cfg);
  for (int n = 0; n <= deg; ++n) {
    auto image = rho_apply(rho_apply(monomial<Real>(n), rho_map::rho_inv, zeta), rho_map::rho_star, zeta);
    image.at_degree(static_cast<std::size_t>(n)) -= numeric_value<Real>(1);
    auto predicted = sin_correction<Real>(n);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      double res = 0;
      if (!within(image[i], predicted[i], cfg.tol, &res)) {
        rep.pass = false;
        rep.detail += "correction T^" + std::to_string(n) + " at T^" + std::to_string(i) + ": residual " +
                      std::to_string(res) + "\n";
      }
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace mzv
