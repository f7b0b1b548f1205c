#include <gtest/gtest.h>

#include "mzv/algebra.hpp"
#include "mzv/index_space.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

NcPoly P(const char* s) { return NcPoly::parse(s); }
Word W(const char* s) { return Word::parse(s); }

// Brute-force shuffle: all interleavings by choosing which positions carry a.
NcPoly shuffle_oracle(const Word& a, const Word& b) {
  NcPoly out;
  std::size_t n = a.size() + b.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
    Word w;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1U ? a[i++] : b[j++]);
    out.add(w, 1);
  }
  return out;
}

}  // namespace

TEST(Word, GradedLexOrderAndSubspaces) {
  EXPECT_LT(W("y"), W("xx"));
  EXPECT_LT(W("xy"), W("yx"));
  EXPECT_TRUE(W("").in_h0());
  EXPECT_TRUE(W("yx").in_h0());
  EXPECT_TRUE(W("yy").in_h1());
  EXPECT_FALSE(W("yy").in_h0());
  EXPECT_FALSE(W("xy").in_h1());
  EXPECT_EQ(W("").size(), 0u);
  EXPECT_THROW(W("xz"), std::invalid_argument);
  EXPECT_THROW(Word::repeat(letter::x, 65), std::length_error);
}

TEST(NcPoly, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "1/2", "yx", "-3/2*yyx+yx", "2*yxyx+4*yyxx", "-1+y"}) {
    NcPoly p = P(s);
    EXPECT_EQ(NcPoly::parse(p.str()), p) << s;
  }
  EXPECT_EQ(P("2*yxyx+4*yyxx").str(), "2*yxyx+4*yyxx");
  EXPECT_EQ((P("yx") - P("yx")).str(), "0");
  EXPECT_EQ(P("yx").coefficient(W("yy")), 0);
}

TEST(IndexWords, Conversions) {
  EXPECT_EQ(word_of_index(Index{2}).str(), "yx");
  EXPECT_EQ(word_of_index(Index{1, 2}).str(), "yyx");
  EXPECT_TRUE(word_of_index(Index{}).empty());
  EXPECT_EQ(index_of_word(W("yx")), (Index{2}));
  EXPECT_EQ(index_of_word(W("yyx")), (Index{1, 2}));
  EXPECT_THROW(index_of_word(W("xy")), domain_error);
}

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle(P("x"), P("y")), P("xy+yx"));
  EXPECT_EQ(shuffle(P("yx"), P("yx")), P("2*yxyx+4*yyxx"));
  EXPECT_EQ(shuffle(P("yxy"), P("1")), P("yxy"));
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(P("yx"), P("yxx")), P("yxyxx+yxxyx+yxxxx"));
  EXPECT_EQ(harmonic(P("y"), P("y")), P("2*yy+yx"));
  EXPECT_EQ(harmonic(P("1"), P("yyx")), P("yyx"));
  EXPECT_THROW(harmonic(P("xy"), P("y")), domain_error);
}

TEST(SigmaAndS, Examples) {
  EXPECT_EQ(sigma(P("y")), P("x+y"));
  EXPECT_EQ(sigma(P("xy")), P("xx+xy"));
  EXPECT_EQ(sigma(P("1")), P("1"));
  EXPECT_EQ(s_map(P("yyx")), P("yxx+yyx"));
  EXPECT_EQ(s_map(P("yx")), P("yx"));
  EXPECT_EQ(s_map(P("1")), P("1"));
  EXPECT_THROW(s_map(P("xy")), domain_error);
}

TEST(Shuffle, MatchesInterleavingEnumeration) {
  testgen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word a = g.word(static_cast<std::size_t>(g.uniform(0, 5)), false);
    Word b = g.word(static_cast<std::size_t>(g.uniform(0, 5)), false);
    EXPECT_EQ(shuffle(a, b), shuffle_oracle(a, b)) << a.str() << " " << b.str();
  }
}

TEST(Products, CommutativeAssociativeDistributive) {
  testgen::Gen g(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    NcPoly a = g.poly(3, 3), b = g.poly(3, 3), c = g.poly(2, 2);
    rational s(g.uniform(-4, 4), 3);
    s.canonicalize();
    for (product op : {product::shuffle, product::harmonic}) {
      EXPECT_EQ(multiply(op, a, b), multiply(op, b, a));
      EXPECT_EQ(multiply(op, multiply(op, a, b), c), multiply(op, a, multiply(op, b, c)));
      EXPECT_EQ(multiply(op, a, b + c), multiply(op, a, b) + multiply(op, a, c));
      NcPoly sa = a;
      sa *= s;
      NcPoly ab = multiply(op, a, b);
      ab *= s;
      EXPECT_EQ(multiply(op, sa, b), ab);
    }
  }
}

TEST(Products, SubspaceClosureAndGrading) {
  testgen::Gen g(7);
  for (int trial = 0; trial < 100; ++trial) {
    Word a = g.word(static_cast<std::size_t>(g.uniform(2, 5)), true, true);
    Word b = g.word(static_cast<std::size_t>(g.uniform(2, 4)), true, true);
    const NcPoly& sh = shuffle(a, b);
    EXPECT_TRUE(sh.in_h0());
    EXPECT_TRUE(sh.homogeneous(a.size() + b.size()));
    Word c = g.word(static_cast<std::size_t>(g.uniform(1, 5)));
    Word d = g.word(static_cast<std::size_t>(g.uniform(1, 4)));
    const NcPoly& h = harmonic(c, d);
    EXPECT_TRUE(h.in_h1());
    EXPECT_TRUE(h.homogeneous(c.size() + d.size()));
  }
}

TEST(SMap, AgreesWithStarExpansion) {
  for (const Index& k : indices_up_to_weight(7)) {
    NcPoly expected;
    for (const auto& [l, c] : star_expand(k)) expected.add(word_of_index(l), c);
    EXPECT_EQ(s_map(NcPoly(word_of_index(k))), expected) << k.str();
  }
}

TEST(SMap, UnitriangularOnEachWeight) {
  // S(z_k) = z_k + (terms of strictly smaller depth), so in the z-word basis
  // ordered by depth the matrix is unitriangular, hence invertible.
  for (int w = 1; w <= 7; ++w) {
    for (int r = 1; r <= w; ++r) {
      for (const Index& k : compositions(w, r)) {
        NcPoly image = s_map(NcPoly(word_of_index(k)));
        EXPECT_EQ(image.coefficient(word_of_index(k)), 1);
        for (const auto& [word, c] : image) {
          if (word != word_of_index(k)) {
            EXPECT_LT(index_of_word(word).depth(), k.depth());
          }
        }
      }
    }
  }
}

TEST(Products, MemoizedResultsAreStableAcrossCacheClears) {
  Word a = W("yxyx"), b = W("yyx");
  NcPoly first = shuffle(a, b);
  NcPoly h = harmonic(a, b);
  clear_product_caches();
  EXPECT_EQ(shuffle(b, a), first);
  EXPECT_EQ(harmonic(b, a), h);
}
