#pragma once

// 2-posets (finite posets with an {x, y} labelling), the W-map to words, the
// zig-zag posets X*(k) and the t-adic combination X*_S(k).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

class TwoPoset {
 public:
  static constexpr std::size_t max_vertices = 64;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  letter label(std::size_t v) const { return labels_[v]; }

  std::size_t add_vertex(letter l) {
    if (labels_.size() == max_vertices) throw std::length_error("2-poset limited to 64 vertices");
    labels_.push_back(l);
    below_.push_back(0);
    return labels_.size() - 1;
  }

  /// Adjoin lo < hi and close transitively.
  void add_relation(std::size_t lo, std::size_t hi) {
    if (lo >= size() || hi >= size()) throw std::out_of_range("2-poset vertex out of range");
    std::uint64_t lower = below_[lo] | bit(lo);
    if (lower & bit(hi)) throw std::invalid_argument("relation would create a cycle");
    for (std::size_t v = 0; v < size(); ++v) {
      if (v == hi || (below_[v] & bit(hi))) below_[v] |= lower;
    }
  }

  /// Strict order: u < v.
  bool less(std::size_t u, std::size_t v) const { return (below_[v] & bit(u)) != 0; }
  bool comparable(std::size_t u, std::size_t v) const { return u == v || less(u, v) || less(v, u); }
  std::uint64_t below_mask(std::size_t v) const { return below_[v]; }

  bool is_minimal(std::size_t v) const { return below_[v] == 0; }
  bool is_maximal(std::size_t v) const {
    for (std::size_t u = 0; u < size(); ++u) {
      if (less(v, u)) return false;
    }
    return true;
  }

  /// All maximal vertices labelled x and all minimal vertices labelled y.
  bool admissible() const {
    for (std::size_t v = 0; v < size(); ++v) {
      if (is_maximal(v) && labels_[v] != letter::x) return false;
      if (is_minimal(v) && labels_[v] != letter::y) return false;
    }
    return true;
  }

  /// Cover pairs (u, v): u < v with nothing strictly between, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < size(); ++v) {
      for (std::size_t u = 0; u < size(); ++u) {
        if (!less(u, v)) continue;
        bool direct = true;
        for (std::size_t w = 0; w < size() && direct; ++w) direct = !(less(u, w) && less(w, v));
        if (direct) out.emplace_back(u, v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// "vertices: 0:y 1:x; covers: 0<1"
  std::string str() const {
    std::string s = "vertices:";
    for (std::size_t v = 0; v < size(); ++v) s += " " + std::to_string(v) + ":" + to_char(labels_[v]);
    s += "; covers:";
    for (auto [u, v] : covers()) s += " " + std::to_string(u) + "<" + std::to_string(v);
    return s;
  }

 private:
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

  std::vector<letter> labels_;
  std::vector<std::uint64_t> below_;
};

/// Disjoint union; the vertices of `b` are renumbered after those of `a`.
inline TwoPoset disjoint_union(const TwoPoset& a, const TwoPoset& b) {
  TwoPoset r = a;
  std::size_t offset = a.size();
  for (std::size_t v = 0; v < b.size(); ++v) r.add_vertex(b.label(v));
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (std::size_t u = 0; u < b.size(); ++u) {
      if (b.less(u, v)) r.add_relation(u + offset, v + offset);
    }
  }
  return r;
}

/// A totally ordered 2-poset whose labels, read upwards, spell `w`.
inline TwoPoset chain(const Word& w) {
  TwoPoset p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    p.add_vertex(w[i]);
    if (i > 0) p.add_relation(i - 1, i);
  }
  return p;
}

/// Zig-zag poset of the star value: one block b_i < c_{i,1} < ... < c_{i,k_i-1}
/// per part (b labelled y, c labelled x) and b_{i-1} < top(B_i) for i >= 2.
inline TwoPoset x_star(const Index& k) {
  TwoPoset p;
  std::size_t prev_bottom = 0;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    std::size_t bottom = p.add_vertex(letter::y);
    std::size_t top = bottom;
    for (int c = 1; c < k[i]; ++c) {
      std::size_t v = p.add_vertex(letter::x);
      p.add_relation(top, v);
      top = v;
    }
    if (i > 0) p.add_relation(prev_bottom, top);
    prev_bottom = bottom;
  }
  return p;
}

/// Sum over linear extensions of the label words, enumerated from the top down
/// with memoization on the set of vertices still to be placed.
inline NcPoly w_map(const TwoPoset& p) {
  std::size_t n = p.size();
  std::vector<std::uint64_t> above(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (p.less(u, v)) above[u] |= std::uint64_t{1} << v;
    }
  }
  std::unordered_map<std::uint64_t, NcPoly> memo;
  auto rec = [&](auto&& self, std::uint64_t remaining) -> const NcPoly& {
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    NcPoly result;
    if (remaining == 0) {
      result = NcPoly::one();
    } else {
      for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t b = std::uint64_t{1} << v;
        if ((remaining & b) && (above[v] & remaining) == 0) {
          Word last;
          last.push_back(p.label(v));
          result += self(self, remaining & ~b).appended(last);
        }
      }
    }
    return memo.emplace(remaining, std::move(result)).first->second;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, all);
}

/// w*(k) = W(X*(k)), cached per thread.
inline const NcPoly& w_star(const Index& k) {
  thread_local std::unordered_map<Index, NcPoly, IndexHash> cache;
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  return cache.emplace(k, w_map(x_star(k))).first->second;
}

inline integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// A chain spelling `base` upwards whose top vertex carries one further chain per
/// entry of `branches` (each spelled upwards, no relations between branches).
inline TwoPoset branched_chain(const Word& base, const std::vector<Word>& branches) {
  if (base.empty()) throw std::invalid_argument("branched_chain needs a non-empty base");
  TwoPoset p = chain(base);
  std::size_t top = base.size() - 1;
  for (const Word& b : branches) {
    std::size_t below = top;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::size_t v = p.add_vertex(b[i]);
      p.add_relation(below, v);
      below = v;
    }
  }
  return p;
}

/// Two x-chains of lengths c and d on a common top of `base`, against
/// binom(c+d, c) times a single x-chain of length c+d.
inline std::pair<NcPoly, NcPoly> binomial_collapse_sides(const Word& base, int c, int d) {
  NcPoly lhs = w_map(branched_chain(base, {Word::repeat(letter::x, c), Word::repeat(letter::x, d)}));
  NcPoly rhs = w_map(branched_chain(base, {Word::repeat(letter::x, c + d)}));
  rhs *= rational(binomial(c + d, c));
  return {lhs, rhs};
}

/// The t-shifting identity, coefficient of t^n for n = 0..order:
///   sum_{l'+l''=n} binom(k+l''-1, l'') W(chain y x^{k+l''-1} y x^{l'})
/// against W(y-root carrying the chains x^{k-1} y and x^n).
inline std::pair<std::vector<NcPoly>, std::vector<NcPoly>> shifting_identity_sides(int k, int order) {
  if (k < 1) throw std::invalid_argument("shifting identity needs k >= 1");
  std::vector<NcPoly> lhs(static_cast<std::size_t>(order) + 1), rhs(lhs.size());
  Word y = Word::repeat(letter::y, 1);
  for (int n = 0; n <= order; ++n) {
    for (int l2 = 0; l2 <= n; ++l2) {
      Word w = y + Word::repeat(letter::x, k + l2 - 1) + y + Word::repeat(letter::x, n - l2);
      lhs[static_cast<std::size_t>(n)].add_scaled(w_map(chain(w)), rational(binomial(k + l2 - 1, l2)));
    }
    Word first = Word::repeat(letter::x, k - 1) + y;
    rhs[static_cast<std::size_t>(n)] = w_map(branched_chain(y, {first, Word::repeat(letter::x, n)}));
  }
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// X*_S(k) in P[[t]]

struct PosetTerm {
  rational coefficient;
  TwoPoset poset;
};

/// Truncated power series in t whose coefficients are formal combinations of 2-posets.
struct PosetSeries {
  int order = 0;
  std::vector<std::vector<PosetTerm>> coefficients;

  explicit PosetSeries(int order_) : order(order_), coefficients(static_cast<std::size_t>(order_) + 1) {}

  /// W applied coefficientwise.
  std::vector<NcPoly> w_images() const {
    std::vector<NcPoly> out;
    for (const auto& terms : coefficients) {
      NcPoly p;
      for (const auto& t : terms) p.add_scaled(w_map(t.poset), t.coefficient);
      out.push_back(std::move(p));
    }
    return out;
  }
};

/// Calls f(l, total) for every l in Z_{>=0}^{len} with l_1 + ... + l_len <= max_total.
template <class F>
void for_each_shift(std::size_t len, int max_total, F&& f) {
  std::vector<int> l(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
    if (pos == len) {
      f(static_cast<const std::vector<int>&>(l), used);
      return;
    }
    for (int v = 0; v + used <= max_total; ++v) {
      l[pos] = v;
      self(self, pos + 1, used + v);
    }
    l[pos] = 0;
  };
  rec(rec, 0, 0);
}

/// The tail block for the t-adic sums: (k_r + l_r, ..., k_{i+1} + l_{i+1}) with
/// weight prod_j binom(k_j + l_j - 1, l_j), where `tail` = (k_{i+1}, ..., k_r).
inline Index shifted_reversal(const Index& tail, const std::vector<int>& l) {
  std::vector<int> parts(tail.depth());
  for (std::size_t j = 0; j < tail.depth(); ++j) parts[tail.depth() - 1 - j] = tail[j] + l[j];
  return Index(std::move(parts));
}

inline integer shift_weight(const Index& tail, const std::vector<int>& l) {
  integer w = 1;
  for (std::size_t j = 0; j < tail.depth(); ++j) w *= binomial(tail[j] + l[j] - 1, l[j]);
  return w;
}

inline PosetSeries x_star_hat(const Index& k, int order) {
  if (order < 0) throw domain_error("t-order must be non-negative");
  PosetSeries s(order);
  std::size_t r = k.depth();
  for (std::size_t i = 0; i <= r; ++i) {
    Index head = k.slice(0, i);
    Index tail = k.slice(i, r);
    int sign = tail.weight() % 2 ? -1 : 1;
    TwoPoset head_poset = x_star(head);
    for_each_shift(tail.depth(), order, [&](const std::vector<int>& l, int total) {
      rational c = rational(shift_weight(tail, l)) * sign;
      s.coefficients[static_cast<std::size_t>(total)].push_back(
          {c, disjoint_union(head_poset, x_star(shifted_reversal(tail, l)))});
    });
  }
  return s;
}

}  // namespace mzv
