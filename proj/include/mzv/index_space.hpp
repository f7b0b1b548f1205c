#pragma once

// The Q-vector space on indices: star expansion and its inverse, cyclic
// classes of compositions, and the cyclic comma/plus sums S_m(k).

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// Finite Q-linear combination of indices, ordered for deterministic printing.
class IndexCombo {
 public:
  using map_type = std::map<Index, rational>;

  IndexCombo() = default;
  IndexCombo(const Index& k, const rational& c = 1) { add(k, c); }  // NOLINT

  void add(const Index& k, const rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_scaled(const IndexCombo& o, const rational& s) {
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  rational coefficient(const Index& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? rational(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  IndexCombo& operator+=(const IndexCombo& o) {
    add_scaled(o, 1);
    return *this;
  }
  IndexCombo& operator-=(const IndexCombo& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend IndexCombo operator+(IndexCombo a, const IndexCombo& b) { return a += b; }
  friend IndexCombo operator-(IndexCombo a, const IndexCombo& b) { return a -= b; }
  friend IndexCombo operator*(const rational& s, const IndexCombo& a) {
    IndexCombo r;
    r.add_scaled(a, s);
    return r;
  }
  friend bool operator==(const IndexCombo&, const IndexCombo&) = default;

  /// Sum over k in M of f(k), for f: Index -> IndexCombo, extended linearly.
  template <class F>
  IndexCombo map(F&& f) const {
    IndexCombo r;
    for (const auto& [k, c] : terms_) r.add_scaled(f(k), c);
    return r;
  }

  /// "2*(1,2)-(3)"; zero prints as "0", the empty index as "()".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (c < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      rational a = abs(c);
      if (a != 1) out += a.get_str() + "*";
      out += "(" + k.str() + ")";
      first = false;
    }
    return out;
  }

 private:
  map_type terms_;
};

/// Apply a comma/plus filling: bit i of `plus_mask` set means box i (between
/// parts i and i+1) is a plus.
inline Index contract(const std::vector<int>& parts, std::uint64_t plus_mask) {
  std::vector<int> out;
  if (parts.empty()) return Index{};
  out.push_back(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if ((plus_mask >> (i - 1)) & 1U) {
      out.back() += parts[i];
    } else {
      out.push_back(parts[i]);
    }
  }
  return Index(std::move(out));
}

/// k^* = sum over all comma/plus choices of (k_1 [] ... [] k_r).
inline IndexCombo star_expand(const Index& k) {
  IndexCombo r;
  if (k.empty()) return IndexCombo(k);
  std::uint64_t boxes = k.depth() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << boxes); ++mask) r.add(contract(k.parts(), mask), 1);
  return r;
}

inline IndexCombo star_expand(const IndexCombo& m) {
  return m.map([](const Index& k) { return star_expand(k); });
}

/// Alternating comma/plus sum, the preimage of k under star expansion.
inline IndexCombo star_invert(const Index& k) {
  if (k.empty()) throw domain_error("star_invert needs a non-empty index");
  IndexCombo r;
  std::uint64_t boxes = k.depth() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << boxes); ++mask) {
    int sign = (__builtin_popcountll(mask) % 2) ? -1 : 1;
    r.add(contract(k.parts(), mask), sign);
  }
  return r;
}

inline IndexCombo star_invert(const IndexCombo& m) {
  return m.map([](const Index& k) { return star_invert(k); });
}

// ---------------------------------------------------------------------------
// cyclic classes

/// Lexicographically smallest rotation.
inline Index canonical_rotation(const Index& k) {
  Index best = k;
  for (std::size_t s = 1; s < k.depth(); ++s) best = std::min(best, k.rotated(s));
  return best;
}

struct CyclicClass {
  Index representative;
  /// Distinct rotations of the representative, in lexicographic order.
  std::vector<Index> members;

  int weight() const { return representative.weight(); }
  std::size_t depth() const { return representative.depth(); }

  static CyclicClass of(const Index& k) {
    CyclicClass c;
    c.representative = canonical_rotation(k);
    std::set<Index> rots;
    for (std::size_t s = 0; s < std::max<std::size_t>(k.depth(), 1); ++s) rots.insert(k.rotated(s));
    c.members.assign(rots.begin(), rots.end());
    return c;
  }

  std::string str() const { return "[" + representative.str() + "]"; }
  friend bool operator==(const CyclicClass& a, const CyclicClass& b) { return a.representative == b.representative; }
};

/// Pi(k, r): the rotation classes of compositions of `weight` into `depth` parts.
inline std::vector<CyclicClass> cyclic_classes(int weight, int depth) {
  if (depth < 1 || depth > weight) {
    throw domain_error("cyclic_classes needs 1 <= r <= k, got k=" + std::to_string(weight) +
                       " r=" + std::to_string(depth));
  }
  std::vector<CyclicClass> out;
  for (const Index& k : compositions(weight, depth)) {
    if (canonical_rotation(k) == k) out.push_back(CyclicClass::of(k));
  }
  return out;
}

/// All classes of weight <= max_weight, by weight, depth, then representative.
inline std::vector<CyclicClass> cyclic_classes_up_to(int max_weight) {
  std::vector<CyclicClass> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (int r = 1; r <= w; ++r) {
      auto c = cyclic_classes(w, r);
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// S_m(k)

enum class cut_policy { smallest_comma, largest_comma };

/// The cyclic word k_1 []_1 k_2 ... k_r []_r read starting after a comma box
/// `cut` (0-based): contracted parts k_{cut+2} ... k_{cut+1} (cyclically).
inline Index read_cyclic(const Index& k, std::uint64_t plus_mask, std::size_t cut) {
  std::size_t r = k.depth();
  std::vector<int> parts;
  std::uint64_t interior = 0;
  for (std::size_t s = 0; s < r; ++s) {
    std::size_t pos = (cut + 1 + s) % r;
    parts.push_back(k[pos]);
    if (s + 1 < r && ((plus_mask >> pos) & 1U)) interior |= std::uint64_t{1} << s;
  }
  return contract(parts, interior);
}

/// Sum over the fillings of the r cyclic boxes with exactly m pluses, each read
/// as an index starting after the comma chosen by `policy`.
inline IndexCombo s_m(const Index& k, std::size_t m, cut_policy policy = cut_policy::smallest_comma) {
  if (k.empty()) throw domain_error("S_m needs a non-empty index");
  std::size_t r = k.depth();
  if (m + 1 > r) {
    throw domain_error("S_m needs 0 <= m <= depth-1, got m=" + std::to_string(m) + " for depth " + std::to_string(r));
  }
  IndexCombo out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
    std::size_t cut = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (((mask >> j) & 1U) == 0) {
        cut = j;
        if (policy == cut_policy::smallest_comma) break;
      }
    }
    out.add(read_cyclic(k, mask, cut), 1);
  }
  return out;
}

/// Sum of all r rotations of each term: sum_{i=1}^{r} (l_{i+1}, ..., l_r, l_1, ..., l_i).
inline IndexCombo cyclic_symmetrize(const IndexCombo& m) {
  return m.map([](const Index& l) {
    IndexCombo r;
    for (std::size_t i = 1; i <= l.depth(); ++i) r.add(l.rotated(i), 1);
    return r;
  });
}

}  // namespace mzv
