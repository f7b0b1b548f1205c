#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/posets.hpp"
#include "mzv/word.hpp"

namespace mzv {

inline void PrintTo(const NcPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Word& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const Index& k, std::ostream* os) { *os << "(" << k.str() << ")"; }

}  // namespace mzv

namespace mzv::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  /// A word of length n; `h1` forces a leading y, `h0` additionally a trailing x.
  Word word(std::size_t n, bool h1 = true, bool h0 = false) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      letter l = coin() ? letter::y : letter::x;
      if (i == 0 && (h1 || h0)) l = letter::y;
      if (i + 1 == n && h0 && n > 1) l = letter::x;
      w.push_back(l);
    }
    return w;
  }

  /// Up to `terms` words of length <= max_len with small rational coefficients.
  NcPoly poly(std::size_t max_len, int terms, bool h1 = true, bool h0 = false) {
    NcPoly p;
    for (int i = 0; i < terms; ++i) {
      std::size_t n = static_cast<std::size_t>(uniform(h0 ? 2 : 1, static_cast<int>(max_len)));
      rational c(uniform(-5, 5), uniform(1, 3));
      c.canonicalize();
      p.add(word(n, h1, h0), c);
    }
    return p;
  }

  Index index(int max_weight) {
    int w = uniform(1, max_weight);
    std::vector<int> parts;
    while (w > 0) {
      int part = uniform(1, w);
      parts.push_back(part);
      w -= part;
    }
    return Index(parts);
  }

  /// A random 2-poset on n vertices: relations i < j drawn for i < j with probability p.
  TwoPoset poset(std::size_t n, double p = 0.3) {
    TwoPoset q;
    for (std::size_t v = 0; v < n; ++v) q.add_vertex(coin() ? letter::y : letter::x);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (coin(p) && !q.less(i, j)) q.add_relation(i, j);
      }
    }
    return q;
  }

  /// A random admissible 2-poset: minimal vertices relabelled y, maximal ones x;
  /// posets with isolated vertices are redrawn.
  TwoPoset admissible_poset(std::size_t n) {
    while (true) {
      TwoPoset q = poset(n, 0.45);
      TwoPoset r;
      bool isolated = false;
      for (std::size_t v = 0; v < n; ++v) {
        bool mn = q.is_minimal(v), mx = q.is_maximal(v);
        if (mn && mx) isolated = true;
        r.add_vertex(mn ? letter::y : mx ? letter::x : q.label(v));
      }
      if (isolated && n > 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          if (q.less(i, j) && !r.less(i, j)) r.add_relation(i, j);
        }
      }
      return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mzv::testgen
