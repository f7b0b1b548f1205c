#pragma once

// Truncated t-series of words: F(k), w*_S(k), the cyclic-sum combinations and
// their tilde variants, the A/B/C decomposition, and the exact second-main and
// key-prop checks on indices and cyclic classes.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/index_space.hpp"
#include "mzv/posets.hpp"
#include "mzv/report.hpp"

namespace mzv {

/// Element of H[[t]] truncated after t^order; arithmetic drops higher terms.
class WordSeries {
 public:
  explicit WordSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order < 0 ? 0 : order) + 1) {
    if (order < 0) throw domain_error("t-order must be non-negative");
  }
  static WordSeries constant(const NcPoly& p, int order) {
    WordSeries s(order);
    s.coeffs_[0] = p;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const NcPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  NcPoly& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<NcPoly>& coefficients() const { return coeffs_; }

  /// this += c * p * t^n, a no-op beyond the truncation order.
  void add(int n, const NcPoly& p, const rational& c = 1) {
    if (n <= order()) coeffs_[static_cast<std::size_t>(n)].add_scaled(p, c);
  }
  /// this += c * s * t^shift.
  void add_shifted(const WordSeries& s, int shift, const rational& c = 1) {
    for (int n = 0; n <= s.order() && n + shift <= order(); ++n) add(n + shift, s[n], c);
  }

  WordSeries& operator+=(const WordSeries& o) {
    add_shifted(o, 0);
    return *this;
  }
  WordSeries& operator-=(const WordSeries& o) {
    add_shifted(o, 0, -1);
    return *this;
  }
  friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
  friend WordSeries operator-(WordSeries a, const WordSeries& b) { return a -= b; }
  friend WordSeries operator*(const rational& c, const WordSeries& a) {
    WordSeries r(a.order());
    r.add_shifted(a, 0, c);
    return r;
  }
  friend bool operator==(const WordSeries& a, const WordSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
      if (n) out += " ; ";
      out += "t^" + std::to_string(n) + ": " + coeffs_[static_cast<std::size_t>(n)].str();
    }
    return out;
  }

 private:
  std::vector<NcPoly> coeffs_;
};

/// Coefficientwise shuffle product, truncated at the smaller order.
inline WordSeries shuffle(const WordSeries& a, const WordSeries& b) {
  WordSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (!b[j].is_zero()) r[i + j] += shuffle(a[i], b[j]);
    }
  }
  return r;
}

/// Sum over l with |l| <= order of prod_j binom(k_j + l_j - 1, l_j) w*(k_r + l_r, ..., k_1 + l_1) t^{|l|}.
inline WordSeries shifted_tail_series(const Index& tail, int order) {
  WordSeries s(order);
  for_each_shift(tail.depth(), order, [&](const std::vector<int>& l, int total) {
    s.add(total, w_star(shifted_reversal(tail, l)), rational(shift_weight(tail, l)));
  });
  return s;
}

/// F(k): the shifted tail series with the extra sign prod_j (-1)^{k_j}.
inline WordSeries f_series(const Index& k, int order) {
  WordSeries s = shifted_tail_series(k, order);
  return k.weight() % 2 ? rational(-1) * s : s;
}

/// w*_S(k) = sum_i (-1)^{k_{i+1} + ... + k_r} w*(k_1..k_i) sh (shifted tail series of k_{i+1}..k_r).
inline const WordSeries& w_star_hat(const Index& k, int order) {
  if (order < 0) throw domain_error("t-order must be non-negative");
  thread_local std::map<std::pair<Index, int>, WordSeries> cache;
  auto key = std::pair{k, order};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  WordSeries s(order);
  std::size_t r = k.depth();
  for (std::size_t i = 0; i <= r; ++i) {
    Index tail = k.slice(i, r);
    WordSeries head = WordSeries::constant(w_star(k.slice(0, i)), order);
    s.add_shifted(shuffle(head, shifted_tail_series(tail, order)), 0, tail.weight() % 2 ? -1 : 1);
  }
  return cache.emplace(key, std::move(s)).first->second;
}

namespace detail {

// sum_{j=0}^{last-2} of f((j+1, middle..., last-j)) for an index (middle..., last)
template <class F>
void for_each_split(const Index& l, F&& f) {
  int last = l.back();
  Index middle = l.slice(0, l.depth() - 1);
  for (int j = 0; j <= last - 2; ++j) f((Index{j + 1} + middle).with(last - j));
}

}  // namespace detail

/// Tilde cyclic-sum word: sum_i sum_{j=0}^{k_i-2} w*(j+1, k_{i+1}, ..., k_{i-1}, k_i - j).
inline NcPoly w_csf_tilde(const Index& k) {
  if (k.empty()) throw domain_error("cyclic-sum words need a non-empty index");
  NcPoly p;
  for (std::size_t i = 1; i <= k.depth(); ++i) {
    detail::for_each_split(k.rotated(i), [&](const Index& m) { p += w_star(m); });
  }
  return p;
}

inline NcPoly w_csf(const Index& k) {
  NcPoly p = w_csf_tilde(k);
  p.add_scaled(w_star(Index{k.weight() + 1}), -k.weight());
  return p;
}

/// Tilde t-adic cyclic-sum series (without the -k w*_S(k+1) term).
inline WordSeries w_csf_hat_tilde(const Index& k, int order) {
  if (k.empty()) throw domain_error("cyclic-sum words need a non-empty index");
  WordSeries s(order);
  for (std::size_t i = 1; i <= k.depth(); ++i) {
    Index rot = k.rotated(i);
    detail::for_each_split(rot, [&](const Index& m) { s += w_star_hat(m, order); });
    for (int j = 0; j <= order; ++j) s.add_shifted(w_star_hat(Index{j + 1} + rot, order - j), j, -1);
  }
  return s;
}

inline WordSeries w_csf_hat(const Index& k, int order) {
  WordSeries s = w_csf_hat_tilde(k, order);
  s.add_shifted(w_star_hat(Index{k.weight() + 1}, order), 0, -k.weight());
  return s;
}

/// w*_CSF(k) + (-1)^{k+1} sum_l prod_j binom(k_j + l_j - 1, l_j) w*_CSF(overline(k + l)) t^{|l|}.
inline WordSeries second_main_rhs(const Index& k, int order) {
  WordSeries s = WordSeries::constant(w_csf(k), order);
  int sign = k.weight() % 2 ? 1 : -1;
  for_each_shift(k.depth(), order, [&](const std::vector<int>& l, int total) {
    s.add(total, w_csf(shifted_reversal(k, l)), rational(shift_weight(k, l)) * sign);
  });
  return s;
}

namespace detail {

inline void compare_series(Report& rep, const WordSeries& lhs, const WordSeries& rhs) {
  rep.pass = true;
  for (int n = 0; n <= lhs.order(); ++n) {
    NcPoly diff = lhs[n] - rhs[n];
    rep.residuals.push_back(static_cast<double>(diff.size()));
    if (!diff.is_zero()) {
      rep.pass = false;
      rep.detail += "t^" + std::to_string(n) + ": lhs-rhs=" + diff.str() + "\n";
    }
  }
}

}  // namespace detail

inline Report verify_second_main(const Index& k, int order) {
  stopwatch clock;
  if (k.empty()) throw domain_error("second-main needs a non-empty index");
  Report rep;
  rep.identity = "second-main";
  rep.index = k.str();
  rep.order = order;
  detail::compare_series(rep, w_csf_hat(k, order), second_main_rhs(k, order));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// cyclic classes

/// Class version of the tilde t-adic cyclic sum: sum over the distinct rotations of the class.
inline WordSeries w_csf_hat_tilde(const CyclicClass& alpha, int order) {
  WordSeries s(order);
  for (const Index& k : alpha.members) {
    detail::for_each_split(k, [&](const Index& m) { s += w_star_hat(m, order); });
    for (int j = 0; j <= order; ++j) s.add_shifted(w_star_hat(Index{j + 1} + k, order - j), j, -1);
  }
  return s;
}

inline NcPoly w_csf_tilde(const CyclicClass& alpha) {
  NcPoly p;
  for (const Index& k : alpha.members) detail::for_each_split(k, [&](const Index& m) { p += w_star(m); });
  return p;
}

/// u~(alpha; l) = sum_{k in alpha} prod_s binom(k_s + l_s - 1, l_s)
///   sum_{j=0}^{k_1 + l_1 - 2} w*(j+1, k_r + l_r, ..., k_2 + l_2, k_1 + l_1 - j).
inline NcPoly u_csf_tilde(const CyclicClass& alpha, const std::vector<int>& l) {
  NcPoly p;
  for (const Index& k : alpha.members) {
    rational c(shift_weight(k, l));
    // overline(k + l) = (k_r + l_r, ..., k_1 + l_1) ends with k_1 + l_1.
    detail::for_each_split(shifted_reversal(k, l), [&](const Index& m) { p.add_scaled(w_star(m), c); });
  }
  return p;
}

inline WordSeries key_prop_rhs(const CyclicClass& alpha, int order) {
  WordSeries s = WordSeries::constant(w_csf_tilde(alpha), order);
  int sign = alpha.weight() % 2 ? 1 : -1;
  for_each_shift(alpha.depth(), order,
                 [&](const std::vector<int>& l, int total) { s.add(total, u_csf_tilde(alpha, l), sign); });
  return s;
}

inline Report verify_key_prop(const CyclicClass& alpha, int order) {
  stopwatch clock;
  Report rep;
  rep.identity = "key-prop";
  rep.index = alpha.representative.str();
  rep.order = order;
  detail::compare_series(rep, w_csf_hat_tilde(alpha, order), key_prop_rhs(alpha, order));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

/// The three pieces of sum_{k in alpha} sum_{a+b=k_r-1, b>=1} w*_S(1+a, k_1, ..., k_{r-1}, 1+b)
/// together with the closed forms they are checked against.
struct AbcDecomposition {
  WordSeries a, b, c;
  /// The defining (a,b)-sum computed directly from w*_S.
  WordSeries direct;
  WordSeries a_closed, c_closed;
  bool sum_ok = false;       // A + B + C == direct
  bool b_ok = false;         // B == w~*_CSF(alpha)
  bool a_lemma_ok = false;   // telescoped closed form of A
  bool c_lemma_ok = false;   // Chu-Vandermonde closed form of C

  bool all_ok() const { return sum_ok && b_ok && a_lemma_ok && c_lemma_ok; }
};

inline AbcDecomposition abc(const CyclicClass& alpha, int order) {
  AbcDecomposition d{WordSeries(order), WordSeries(order), WordSeries(order),
                     WordSeries(order), WordSeries(order), WordSeries(order)};
  std::size_t r = alpha.depth();
  for (const Index& k : alpha.members) {
    Index inner = k.slice(0, r - 1);
    for (int a = 0; a + 1 <= k.back() - 1; ++a) {
      int b = k.back() - 1 - a;
      for (std::size_t i = 0; i < r; ++i) {
        WordSeries head = WordSeries::constant(w_star(Index{1 + a} + k.slice(0, i)), order);
        d.a += shuffle(head, f_series(k.slice(i, r - 1).with(1 + b), order));
      }
      Index full = (Index{1 + a} + inner).with(1 + b);
      d.b.add(0, w_star(full));
      d.c += f_series(full, order);
      d.direct += w_star_hat(full, order);
    }
  }
  // closed form for A: sum_{k in alpha} [ sum_l (w*_S(1+l, k) - F(1+l, k)) t^l + F(k, 1) ]
  for (const Index& k : alpha.members) {
    for (int l = 0; l <= order; ++l) {
      d.a_closed.add_shifted(w_star_hat(Index{1 + l} + k, order - l), l);
      d.a_closed.add_shifted(f_series(Index{1 + l} + k, order - l), l, -1);
    }
    d.a_closed += f_series(k.with(1), order);
  }
  // closed form for C: (-1)^{k+1} sum_l u~(alpha; l) t^{|l|} + sum_{k in alpha} [ sum_l F(1+l, k) t^l - F(k, 1) ]
  int sign = alpha.weight() % 2 ? 1 : -1;
  for_each_shift(r, order, [&](const std::vector<int>& l, int total) { d.c_closed.add(total, u_csf_tilde(alpha, l), sign); });
  for (const Index& k : alpha.members) {
    for (int l = 0; l <= order; ++l) d.c_closed.add_shifted(f_series(Index{1 + l} + k, order - l), l);
    d.c_closed -= f_series(k.with(1), order);
  }
  d.sum_ok = (d.a + d.b + d.c) == d.direct;
  d.b_ok = d.b == WordSeries::constant(w_csf_tilde(alpha), order);
  d.a_lemma_ok = d.a == d.a_closed;
  d.c_lemma_ok = d.c == d.c_closed;
  return d;
}

inline Report verify_abc(const CyclicClass& alpha, int order) {
  stopwatch clock;
  Report rep;
  rep.identity = "abc-lemmas";
  rep.index = alpha.representative.str();
  rep.order = order;
  AbcDecomposition d = abc(alpha, order);
  auto record = [&rep](bool ok, const char* label) {
    rep.residuals.push_back(ok ? 0.0 : 1.0);
    if (!ok) rep.detail += std::string(label) + " failed\n";
  };
  record(d.sum_ok, "A+B+C = direct sum");
  record(d.b_ok, "B = w~*_CSF(alpha)");
  record(d.a_lemma_ok, "telescoped form of A");
  record(d.c_lemma_ok, "Chu-Vandermonde form of C");
  rep.pass = d.all_ok();
  if (!d.a_lemma_ok) rep.detail += "A-closed: " + (d.a - d.a_closed).str() + "\n";
  if (!d.c_lemma_ok) rep.detail += "C-closed: " + (d.c - d.c_closed).str() + "\n";
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace mzv
