#pragma once

// Numerical multiple zeta values and the evaluation map Z on admissible words.
//
// A convergent word w = u_1 ... u_n is an iterated integral from 0 to 1. Split
// the path at 1/2:
//   Z(w) = sum_j L(u_1..u_j; 1/2) L(dual(u_{j+1}..u_n); 1/2),
// where dual reverses the word and swaps x and y. Every L(.; 1/2) is a
// multiple polylogarithm at 1/2, a positive series converging like 2^-n.

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "mzv/algebra.hpp"
#include "mzv/index.hpp"
#include "mzv/index_space.hpp"
#include "mzv/numeric.hpp"
#include "mzv/word.hpp"

namespace mzv {

template <class Real = double>
Real to_real(const rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.get_d();
  } else {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
  }
}

namespace detail {

template <class Real>
Real inverse_power(long n, int k) {
  Real p = 1;
  Real base = static_cast<Real>(n);
  for (int i = 0; i < k; ++i) p *= base;
  return Real(1) / p;
}

template <class Real>
Real ten_to_minus(int e) {
  Real r = 1;
  for (int i = 0; i < e; ++i) r /= 10;
  return r;
}

// Per-thread caches, dropped whenever the configuration changes.
template <class Real, class Key, class Hash = std::hash<Key>>
struct config_cache {
  long N = -1;
  int digits = -1;
  std::unordered_map<Key, numeric_value<Real>, Hash> values;

  std::unordered_map<Key, numeric_value<Real>, Hash>& for_config(const EvalConfig& cfg) {
    if (cfg.N != N || cfg.digits != digits) {
      values.clear();
      N = cfg.N;
      digits = cfg.digits;
    }
    return values;
  }
};

}  // namespace detail

/// Li_{k_1..k_r}(1/2) = sum_{0<n_1<...<n_r} 2^{-n_r} / (n_1^{k_1} ... n_r^{k_r}) for the
/// z-word k of `w` (w empty or starting with y).
template <class Real = double>
numeric_value<Real> polylog_half(const Word& w, const EvalConfig& cfg) {
  if (w.empty()) return Real(1);
  thread_local detail::config_cache<Real, Word, WordHash> cache;
  auto& memo = cache.for_config(cfg);
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  Index k = index_of_word(w);
  std::size_t r = k.depth();
  std::vector<Real> partial(r, Real(0));  // partial[i] = sum_{m<n} of the level-i terms
  Real threshold = detail::ten_to_minus<Real>(cfg.digits + 2);
  Real half_power = 1;
  Real sum = 0;
  Real tail = 0;
  for (long n = 1; n <= cfg.N; ++n) {
    half_power /= 2;
    std::vector<Real> term(r);
    for (std::size_t i = 0; i < r; ++i) term[i] = (i == 0 ? Real(1) : partial[i - 1]) * detail::inverse_power<Real>(n, k[i]);
    sum += half_power * term[r - 1];
    for (std::size_t i = 0; i < r; ++i) partial[i] += term[i];
    // the inner sums are at most n^{r-1}, so the tail is below 2^{-n} (n+1)^r
    Real bound = half_power;
    for (std::size_t i = 0; i < r; ++i) bound *= static_cast<Real>(n + 1);
    tail = bound;
    if (n > static_cast<long>(2 * r) && bound < threshold) break;
  }
  Real rounding = sum * std::numeric_limits<Real>::epsilon() * static_cast<Real>(4 * (w.size() + 1));
  numeric_value<Real> v(sum, tail + rounding);
  return memo.emplace(w, v).first->second;
}

/// Z(w) for a single admissible word by the split at 1/2.
template <class Real = double>
numeric_value<Real> z_word(const Word& w, const EvalConfig& cfg) {
  if (!w.in_h0()) throw domain_error("divergent word " + w.str() + ": Z needs an admissible word");
  if (w.empty()) return Real(1);
  thread_local detail::config_cache<Real, Word, WordHash> cache;
  auto& memo = cache.for_config(cfg);
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  numeric_value<Real> total;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    total += polylog_half<Real>(w.prefix(j), cfg) * polylog_half<Real>(w.suffix_from(j).dual_reversed(), cfg);
  }
  return memo.emplace(w, total).first->second;
}

/// zeta(k), or zeta*(k) when `star`; the empty index gives 1.
template <class Real = double>
numeric_value<Real> mzv_num(const Index& k, bool star, const EvalConfig& cfg) {
  if (!k.admissible()) throw domain_error("divergent series: index (" + k.str() + ") is not admissible");
  if (!star) return z_word<Real>(word_of_index(k), cfg);
  numeric_value<Real> total;
  for (const auto& [l, c] : star_expand(k)) total += to_real<Real>(c) * z_word<Real>(word_of_index(l), cfg);
  return total;
}

/// The defining nested series cut at n_r <= N, by the O(rN) partial-sum recursion.
/// The error estimate is |S(N) - S(N/2)|; the true tail is of order N^{1-k_r} (log N)^{r-1}.
template <class Real = double>
numeric_value<Real> mzv_partial_sum(const Index& k, bool star, long N) {
  if (!k.admissible()) throw domain_error("divergent series: index (" + k.str() + ") is not admissible");
  if (N < 2) throw std::invalid_argument("cutoff N must be at least 2");
  if (k.empty()) return Real(1);
  std::size_t r = k.depth();
  std::vector<Real> partial(r, Real(0));
  std::vector<Real> term(r);
  Real sum = 0;
  Real half_sum = 0;
  for (long n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < r; ++i) {
      Real below = i == 0 ? Real(1) : partial[i - 1] + (star ? term[i - 1] : Real(0));
      term[i] = below * detail::inverse_power<Real>(n, k[i]);
    }
    for (std::size_t i = 0; i < r; ++i) partial[i] += term[i];
    sum += term[r - 1];
    if (n == N / 2) half_sum = sum;
  }
  return {sum, abs_value(Real(sum - half_sum))};
}

/// Linear extension of Z to polynomials; every term must be admissible.
template <class Real = double>
numeric_value<Real> z_num(const NcPoly& p, const EvalConfig& cfg) {
  numeric_value<Real> total;
  for (const auto& [w, c] : p.sorted_terms()) total += to_real<Real>(c) * z_word<Real>(w, cfg);
  return total;
}

}  // namespace mzv
