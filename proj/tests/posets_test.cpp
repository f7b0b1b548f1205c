#include <gtest/gtest.h>

#include "mzv/posets.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

NcPoly P(const char* s) { return NcPoly::parse(s); }

TwoPoset singleton(letter l) {
  TwoPoset p;
  p.add_vertex(l);
  return p;
}

// Every bijection checked for order preservation; usable up to ~8 vertices.
NcPoly w_map_oracle(const TwoPoset& p) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  NcPoly out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) ok = !p.less(perm[j], perm[i]);
    }
    if (!ok) continue;
    Word w;
    for (std::size_t v : perm) w.push_back(p.label(v));
    out.add(w, 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST(XStar, Structure) {
  TwoPoset two = x_star(Index{2});
  EXPECT_EQ(two.str(), "vertices: 0:y 1:x; covers: 0<1");
  TwoPoset p22 = x_star(Index{2, 2});
  ASSERT_EQ(p22.size(), 4u);
  EXPECT_TRUE(p22.less(0, 1));
  EXPECT_TRUE(p22.less(2, 3));
  EXPECT_TRUE(p22.less(0, 3));
  EXPECT_FALSE(p22.comparable(1, 3));
  TwoPoset p12 = x_star(Index{1, 2});
  EXPECT_TRUE(p12.less(0, 2));
  EXPECT_TRUE(p12.admissible());
  EXPECT_TRUE(x_star(Index{}).empty());
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(chain(Word::parse("yx")).admissible());
  EXPECT_FALSE(singleton(letter::y).admissible());
  EXPECT_FALSE(x_star(Index{2, 1}).admissible());
  EXPECT_TRUE(TwoPoset{}.admissible());
}

TEST(WMap, Examples) {
  EXPECT_EQ(w_map(x_star(Index{2})), P("yx"));
  EXPECT_EQ(w_map(disjoint_union(singleton(letter::x), singleton(letter::y))), P("xy+yx"));
  EXPECT_EQ(w_map(x_star(Index{2, 2})), P("yxyx+4*yyxx"));
  EXPECT_EQ(w_map(TwoPoset{}), P("1"));
  EXPECT_EQ(w_star(Index{1, 2}), P("2*yyx"));
  EXPECT_EQ(w_star(Index{1, 1, 2}), P("3*yyyx"));
}

TEST(WMap, SingleBlocksAreZWords) {
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(w_star(Index{k}), NcPoly(word_of_index(Index{k}))) << k;
}

TEST(DisjointUnion, Examples) {
  TwoPoset c = chain(Word::parse("yx"));
  EXPECT_EQ(w_map(disjoint_union(TwoPoset{}, c)), w_map(c));
  EXPECT_EQ(w_map(disjoint_union(c, c)), shuffle(P("yx"), P("yx")));
}

TEST(TwoPoset, RejectsCycles) {
  TwoPoset p = chain(Word::parse("yxx"));
  EXPECT_THROW(p.add_relation(2, 0), std::invalid_argument);
  EXPECT_THROW(p.add_relation(0, 7), std::out_of_range);
}

TEST(WMap, MatchesPermutationEnumeration) {
  testgen::Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    TwoPoset p = g.poset(static_cast<std::size_t>(g.uniform(0, 7)));
    EXPECT_EQ(w_map(p), w_map_oracle(p)) << p.str();
  }
}

TEST(WMap, HomomorphismOnRandomAdmissiblePairs) {
  testgen::Gen g(31337);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.uniform(2, 6));
    std::size_t m = static_cast<std::size_t>(g.uniform(2, static_cast<int>(8 - n) < 2 ? 2 : static_cast<int>(8 - n)));
    TwoPoset a = g.admissible_poset(n), b = g.admissible_poset(m);
    ASSERT_TRUE(a.admissible());
    ASSERT_TRUE(b.admissible());
    EXPECT_EQ(w_map(disjoint_union(a, b)), shuffle(w_map(a), w_map(b)));
  }
}

TEST(WMap, W2OnNonComparablePairs) {
  testgen::Gen g(99);
  int checked = 0;
  while (checked < 200) {
    TwoPoset p = g.poset(static_cast<std::size_t>(g.uniform(2, 7)));
    std::size_t a = static_cast<std::size_t>(g.uniform(0, static_cast<int>(p.size()) - 1));
    std::size_t b = static_cast<std::size_t>(g.uniform(0, static_cast<int>(p.size()) - 1));
    if (p.comparable(a, b)) continue;
    TwoPoset lo = p, hi = p;
    lo.add_relation(a, b);
    hi.add_relation(b, a);
    EXPECT_EQ(w_map(p), w_map(lo) + w_map(hi));
    ++checked;
  }
}

TEST(WMap, AdmissibilityMatchesConvergence) {
  for (const Index& k : indices_up_to_weight(6)) {
    TwoPoset p = x_star(k);
    EXPECT_EQ(p.admissible(), k.admissible()) << k.str();
    EXPECT_EQ(w_map(p).in_h0(), k.admissible()) << k.str();
  }
}

TEST(DiagramIdentities, BinomialCollapse) {
  for (const char* base : {"y", "yxy", "yyxy"}) {
    for (int c = 0; c <= 6; ++c) {
      for (int d = 0; c + d <= 6; ++d) {
        auto [lhs, rhs] = binomial_collapse_sides(Word::parse(base), c, d);
        EXPECT_EQ(lhs, rhs) << base << " " << c << " " << d;
      }
    }
  }
}

TEST(DiagramIdentities, ShiftingIdentity) {
  for (int k = 1; k <= 4; ++k) {
    auto [lhs, rhs] = shifting_identity_sides(k, 3);
    for (std::size_t n = 0; n < lhs.size(); ++n) EXPECT_EQ(lhs[n], rhs[n]) << k << " t^" << n;
  }
}

TEST(XStarHat, Examples) {
  auto s2 = x_star_hat(Index{2}, 1).w_images();
  EXPECT_EQ(s2[0], P("2*yx"));
  auto s1 = x_star_hat(Index{1}, 2).w_images();
  EXPECT_TRUE(s1[0].is_zero());
  EXPECT_EQ(s1[1], P("-yx"));
  auto e = x_star_hat(Index{}, 2).w_images();
  EXPECT_EQ(e[0], P("1"));
  EXPECT_TRUE(e[1].is_zero());
  EXPECT_THROW(x_star_hat(Index{1}, -1), domain_error);
}

TEST(Shifts, EnumerationCount) {
  // Compositions of totals <= n into len non-negative parts: binom(n + len, len).
  for (std::size_t len = 0; len <= 4; ++len) {
    for (int n = 0; n <= 4; ++n) {
      long count = 0;
      for_each_shift(len, n, [&](const std::vector<int>&, int) { ++count; });
      EXPECT_EQ(count, binomial(n + static_cast<long>(len), static_cast<long>(len)).get_si());
    }
  }
}
