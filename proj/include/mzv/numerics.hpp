#pragma once

// Regularized values at T = 0, the t-adic symmetric (star) values as numeric
// t-series, and numeric checks of the cyclic sum formulas.

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "mzv/index_identities.hpp"
#include "mzv/mzv_eval.hpp"
#include "mzv/regularization.hpp"
#include "mzv/tadic.hpp"

namespace mzv {

/// Z^•(p; T) evaluated at T = t_value (the regularized value when t_value = 0).
template <class Real = double>
numeric_value<Real> z_reg_num(const NcPoly& p, product op, const EvalConfig& cfg, const Real& t_value = 0) {
  return z_reg_poly<Real>(p, op, cfg).at(t_value);
}

enum class zeta_variant { ast, sh, star_ast, star_sh, star_ky, ky_inv };

inline zeta_variant parse_zeta_variant(const std::string& s) {
  if (s == "ast") return zeta_variant::ast;
  if (s == "sh") return zeta_variant::sh;
  if (s == "star_ast") return zeta_variant::star_ast;
  if (s == "star_sh") return zeta_variant::star_sh;
  if (s == "star_KY") return zeta_variant::star_ky;
  if (s == "KY_inv") return zeta_variant::ky_inv;
  throw std::invalid_argument("unknown zeta variant '" + s + "'");
}

inline const char* to_string(zeta_variant v) {
  switch (v) {
    case zeta_variant::ast: return "ast";
    case zeta_variant::sh: return "sh";
    case zeta_variant::star_ast: return "star_ast";
    case zeta_variant::star_sh: return "star_sh";
    case zeta_variant::star_ky: return "star_KY";
    case zeta_variant::ky_inv: return "KY_inv";
  }
  return "?";
}

namespace detail {

template <class Real, class Key>
struct keyed_cache {
  long N = -1;
  int digits = -1;
  std::map<Key, NumericSeries<Real>> values;

  std::map<Key, NumericSeries<Real>>& for_config(const EvalConfig& cfg) {
    if (cfg.N != N || cfg.digits != digits) {
      values.clear();
      N = cfg.N;
      digits = cfg.digits;
    }
    return values;
  }
};

// zeta^•(k) or zeta^{*,•}(k) = Z^•(S(z_k); 0), cached per thread.
template <class Real>
numeric_value<Real> regularized(const Index& k, product op, bool star, const EvalConfig& cfg) {
  thread_local keyed_cache<Real, std::tuple<Index, int, bool>> cache;
  auto& memo = cache.for_config(cfg);
  auto key = std::tuple{k, static_cast<int>(op), star};
  if (auto it = memo.find(key); it != memo.end()) return it->second[0];
  NcPoly w(word_of_index(k));
  NumericSeries<Real> s(0);
  s[0] = z_reg_num<Real>(star ? s_map(w) : w, op, cfg);
  return memo.emplace(key, s).first->second[0];
}

// The double sum sum_i (-1)^{k_{i+1}+...+k_r} v(k_1..k_i) sum_l prod binom v(k_r+l_r, ..., k_{i+1}+l_{i+1}) t^{|l|}.
template <class Real, class V>
NumericSeries<Real> symmetric_sum(const Index& k, int order, V&& value) {
  NumericSeries<Real> s(order);
  std::size_t r = k.depth();
  for (std::size_t i = 0; i <= r; ++i) {
    Index tail = k.slice(i, r);
    numeric_value<Real> head = value(k.slice(0, i));
    Real sign = tail.weight() % 2 ? -1 : 1;
    for_each_shift(tail.depth(), order, [&](const std::vector<int>& l, int total) {
      Real c = sign * to_real<Real>(rational(shift_weight(tail, l)));
      s.add(total, head * value(shifted_reversal(tail, l)), c);
    });
  }
  return s;
}

}  // namespace detail

/// The t-adic symmetric value of k in the chosen variant, truncated at t^order.
template <class Real = double>
NumericSeries<Real> zeta_hat_num(const Index& k, zeta_variant variant, int order, const EvalConfig& cfg) {
  if (order < 0) throw domain_error("t-order must be non-negative");
  switch (variant) {
    case zeta_variant::ast:
    case zeta_variant::sh:
    case zeta_variant::star_ast:
    case zeta_variant::star_sh: {
      bool star = variant == zeta_variant::star_ast || variant == zeta_variant::star_sh;
      product op = (variant == zeta_variant::ast || variant == zeta_variant::star_ast) ? product::harmonic : product::shuffle;
      return detail::symmetric_sum<Real>(k, order, [&](const Index& m) { return detail::regularized<Real>(m, op, star, cfg); });
    }
    case zeta_variant::star_ky: {
      thread_local detail::keyed_cache<Real, std::pair<Index, int>> cache;
      auto& memo = cache.for_config(cfg);
      if (auto it = memo.find({k, order}); it != memo.end()) return it->second;
      const WordSeries& w = w_star_hat(k, order);
      NumericSeries<Real> s(order);
      for (int n = 0; n <= order; ++n) s[n] = z_reg_num<Real>(w[n], product::shuffle, cfg);
      return memo.emplace(std::pair{k, order}, s).first->second;
    }
    case zeta_variant::ky_inv: {
      if (k.empty()) return zeta_hat_num<Real>(k, zeta_variant::star_ky, order, cfg);
      NumericSeries<Real> s(order);
      for (const auto& [l, c] : star_invert(k)) {
        s.add_shifted(zeta_hat_num<Real>(l, zeta_variant::star_ky, order, cfg), 0, to_real<Real>(c));
      }
      return s;
    }
  }
  return NumericSeries<Real>(order);
}

enum class csf_check { mzsv, tsmzsv, tsmzv_exact };

inline csf_check parse_csf_check(const std::string& s) {
  if (s == "mzsv") return csf_check::mzsv;
  if (s == "tsmzsv") return csf_check::tsmzsv;
  if (s == "tsmzv_exact") return csf_check::tsmzv_exact;
  throw std::invalid_argument("unknown cyclic sum check '" + s + "'");
}

inline const char* to_string(csf_check c) {
  switch (c) {
    case csf_check::mzsv: return "csf-mzsv";
    case csf_check::tsmzsv: return "csf-tsmzsv";
    case csf_check::tsmzv_exact: return "csf-tsmzv-exact";
  }
  return "?";
}

namespace detail {

template <class Real>
void compare_series(Report& rep, const NumericSeries<Real>& lhs, const NumericSeries<Real>& rhs, double tol) {
  rep.pass = true;
  for (int n = 0; n <= lhs.order(); ++n) {
    double res = 0;
    bool ok = within(lhs[n], rhs[n], tol, &res);
    rep.residuals.push_back(res);
    if (!ok) {
      rep.pass = false;
      rep.detail += "t^" + std::to_string(n) + ": lhs=" + std::to_string(static_cast<double>(lhs[n].value)) +
                    " rhs=" + std::to_string(static_cast<double>(rhs[n].value)) + "\n";
    }
  }
}

// k zeta(k+1) trace term carried by the all-ones indices.
template <class Real>
numeric_value<Real> ones_correction(const Index& k, const EvalConfig& cfg) {
  int w = k.weight();
  if (!k.all_ones() || w % 2 == 0) return Real(0);
  return Real(2 * w) * mzv_num<Real>(Index{w + 1}, false, cfg);
}

}  // namespace detail

/// Numeric check of a cyclic sum formula. mzsv: the classical formula for the star
/// values. tsmzsv: its t-adic analogue for the KY star values. tsmzv_exact: the
/// non-star t-adic combination evaluated with KY_inv values, which vanishes except
/// for k = (1, ..., 1), where it equals -(1 + (-1)^{r+1}) r zeta(r+1).
template <class Real = double>
Report verify_csf(csf_check which, const Index& k, int order, const EvalConfig& cfg) {
  stopwatch clock;
  if (k.empty()) throw domain_error("cyclic sum formulas need a non-empty index");
  Report rep;
  rep.identity = to_string(which);
  rep.index = k.str();
  rep.tolerance = cfg.tol;
  int w = k.weight();
  switch (which) {
    case csf_check::mzsv: {
      NumericSeries<Real> lhs(0), rhs(0);
      for (std::size_t i = 1; i <= k.depth(); ++i) {
        detail::for_each_split(k.rotated(i), [&](const Index& m) { lhs[0] += mzv_num<Real>(m, true, cfg); });
      }
      if (!k.all_ones()) rhs[0] = Real(w) * mzv_num<Real>(Index{w + 1}, false, cfg);
      detail::compare_series(rep, lhs, rhs, cfg.tol);
      break;
    }
    case csf_check::tsmzsv: {
      rep.order = order;
      auto ky = [&](const Index& m, int n) { return zeta_hat_num<Real>(m, zeta_variant::star_ky, n, cfg); };
      NumericSeries<Real> lhs(order), rhs(order);
      for (std::size_t i = 1; i <= k.depth(); ++i) {
        Index rot = k.rotated(i);
        detail::for_each_split(rot, [&](const Index& m) { lhs.add_shifted(ky(m, order), 0); });
        for (int j = 0; j <= order; ++j) rhs.add_shifted(ky(Index{j + 1} + rot, order - j), j);
      }
      rhs.add_shifted(ky(Index{w + 1}, order), 0, Real(w));
      rhs[0] -= detail::ones_correction<Real>(k, cfg);
      detail::compare_series(rep, lhs, rhs, cfg.tol);
      break;
    }
    case csf_check::tsmzv_exact: {
      rep.order = order;
      NumericSeries<Real> lhs(order), rhs(order);
      for (const auto& [sym, c] : csf_hat_formal(k, order)) {
        if (sym.t_power > order) continue;
        lhs.add_shifted(zeta_hat_num<Real>(sym.index, zeta_variant::ky_inv, order - sym.t_power, cfg), sym.t_power,
                        to_real<Real>(c));
      }
      rhs[0] = -detail::ones_correction<Real>(k, cfg);
      detail::compare_series(rep, lhs, rhs, cfg.tol);
      break;
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace mzv
