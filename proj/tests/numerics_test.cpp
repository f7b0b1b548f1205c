#include <gtest/gtest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mzv/numerics.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

NcPoly P(const char* s) { return NcPoly::parse(s); }

const double pi = std::acos(-1.0);
const double zeta3 = 1.2020569031595942;

EvalConfig cfg_with_tol(double tol) {
  EvalConfig cfg;
  cfg.tol = tol;
  return cfg;
}

}  // namespace

TEST(MzvNum, Examples) {
  EvalConfig cfg;
  EXPECT_NEAR(mzv_num(Index{2}, false, cfg).value, pi * pi / 6, 1e-13);
  EXPECT_NEAR(mzv_num(Index{1, 2}, false, cfg).value, zeta3, 1e-13);
  EXPECT_NEAR(mzv_num(Index{1, 2}, true, cfg).value, 2 * zeta3, 1e-13);
  EXPECT_NEAR(mzv_num(Index{4}, false, cfg).value, std::pow(pi, 4) / 90, 1e-13);
  // zeta(2,2) = pi^4/120 and zeta(2,2,2) = pi^6/5040.
  EXPECT_NEAR(mzv_num(Index{2, 2}, false, cfg).value, std::pow(pi, 4) / 120, 1e-13);
  EXPECT_NEAR(mzv_num(Index{2, 2, 2}, false, cfg).value, std::pow(pi, 6) / 5040, 1e-13);
  EXPECT_LT(mzv_num(Index{2}, false, cfg).err, 1e-13);
  EXPECT_DOUBLE_EQ(mzv_num(Index{}, false, cfg).value, 1);
}

TEST(MzvNum, RejectsDivergentIndices) {
  EvalConfig cfg;
  EXPECT_THROW(mzv_num(Index{2, 1}, false, cfg), domain_error);
  EXPECT_THROW(mzv_num(Index{1}, true, cfg), domain_error);
  EXPECT_THROW(z_word(Word::parse("yxy"), cfg), domain_error);
  EXPECT_THROW(mzv_partial_sum(Index{1}, false, 1000), domain_error);
}

TEST(MzvNum, DualityOnRandomWords) {
  // The dual word (reverse, swap letters) has the same value.
  testgen::Gen g(8080);
  EvalConfig cfg;
  for (int trial = 0; trial < 40; ++trial) {
    Word w = g.word(static_cast<std::size_t>(g.uniform(2, 8)), true, true);
    Word dual;
    for (std::size_t i = w.size(); i-- > 0;) dual.push_back(w[i] == letter::x ? letter::y : letter::x);
    EXPECT_NEAR(z_word(w, cfg).value, z_word(dual, cfg).value, 1e-12) << w.str();
  }
}

TEST(MzvNum, AgreesWithDirectPartialSums) {
  // The nested-sum oracle at N = 1e6 is only accurate to about (log N)^{r-1} / N.
  EvalConfig cfg;
  for (const Index& k : indices_up_to_weight(5)) {
    if (!k.admissible()) continue;
    for (bool star : {false, true}) {
      auto fast = mzv_num(k, star, cfg);
      auto slow = mzv_partial_sum(k, star, 1'000'000);
      EXPECT_NEAR(fast.value, slow.value, 2 * slow.err + 1e-9) << k.str() << " star=" << star;
    }
  }
}

TEST(MzvNum, PartialSumErrorShrinksWithCutoff) {
  auto a = mzv_partial_sum(Index{2}, false, 10'000);
  auto b = mzv_partial_sum(Index{2}, false, 20'000);
  double exact = pi * pi / 6;
  EXPECT_LT(std::abs(b.value - exact), std::abs(a.value - exact));
  EXPECT_NEAR(std::abs(a.value - exact) / std::abs(b.value - exact), 2.0, 0.01);
  EXPECT_LE(std::abs(a.value - exact), 2 * a.err);
}

TEST(MzvNum, CutoffCapsTheHalfPointSums) {
  EvalConfig coarse;
  coarse.N = 20;
  EvalConfig fine;
  double c = mzv_num(Index{3}, false, coarse).value;
  double f = mzv_num(Index{3}, false, fine).value;
  EXPECT_GT(std::abs(c - f), 1e-9);
  EXPECT_NEAR(f, zeta3, 1e-13);
}

TEST(MzvNum, HighPrecisionBackend) {
  using big = boost::multiprecision::cpp_bin_float_50;
  EvalConfig cfg;
  cfg.digits = 40;
  cfg.N = 100'000'000;
  big z3 = mzv_num<big>(Index{3}, false, cfg).value;
  big z12 = mzv_num<big>(Index{1, 2}, false, cfg).value;
  big expect("1.2020569031595942853997381615114499907649862923405");
  EXPECT_LT(static_cast<double>(abs(z3 - expect)), 1e-38);
  EXPECT_LT(static_cast<double>(abs(z12 - z3)), 1e-38);
}

TEST(ZNum, Examples) {
  EvalConfig cfg;
  EXPECT_NEAR(z_num(P("yx"), cfg).value, pi * pi / 6, 1e-13);
  EXPECT_NEAR(z_num(P("yyx-yxx"), cfg).value, 0, 1e-13);
  EXPECT_NEAR(z_num(P("1/2*yx+1"), cfg).value, pi * pi / 12 + 1, 1e-13);
  EXPECT_DOUBLE_EQ(z_num(P("0"), cfg).value, 0);
}

TEST(ZNum, ProductCompatibility) {
  // Z is multiplicative for both products on admissible words.
  testgen::Gen g(123);
  EvalConfig cfg;
  for (int trial = 0; trial < 30; ++trial) {
    Word a = g.word(static_cast<std::size_t>(g.uniform(2, 4)), true, true);
    Word b = g.word(static_cast<std::size_t>(g.uniform(2, 4)), true, true);
    double prod = z_word(a, cfg).value * z_word(b, cfg).value;
    EXPECT_NEAR(z_num(shuffle(a, b), cfg).value, prod, 1e-11) << a.str() << " " << b.str();
    EXPECT_NEAR(z_num(harmonic(a, b), cfg).value, prod, 1e-11) << a.str() << " " << b.str();
  }
}

TEST(ZRegNum, Examples) {
  EvalConfig cfg;
  EXPECT_NEAR(z_reg_num(P("yxy"), product::harmonic, cfg).value, -2 * zeta3, 1e-12);
  EXPECT_NEAR(z_reg_num(P("yxy"), product::shuffle, cfg).value, -2 * zeta3, 1e-12);
  EXPECT_NEAR(z_reg_num(P("y"), product::shuffle, cfg, 1.5).value, 1.5, 1e-15);
  // Z^*(yy; T) = (T^2 - zeta(2)) / 2; Z^sh(yy; T) = T^2 / 2.
  EXPECT_NEAR(z_reg_num(P("yy"), product::harmonic, cfg, 2.0).value, (4 - pi * pi / 6) / 2, 1e-12);
  EXPECT_NEAR(z_reg_num(P("yy"), product::shuffle, cfg, 2.0).value, 2, 1e-12);
}

TEST(ZetaHat, Examples) {
  EvalConfig cfg;
  auto ky2 = zeta_hat_num(Index{2}, zeta_variant::star_ky, 2, cfg);
  EXPECT_NEAR(ky2[0].value, pi * pi / 3, 1e-12);
  EXPECT_NEAR(ky2[1].value, 2 * zeta3, 1e-12);
  EXPECT_NEAR(ky2[2].value, 3 * std::pow(pi, 4) / 90, 1e-12);
  // For depth one every variant agrees: zeta(k) (1 + (-1)^k) plus the t-tail.
  for (zeta_variant v : {zeta_variant::ast, zeta_variant::sh, zeta_variant::star_ast, zeta_variant::star_sh,
                         zeta_variant::ky_inv}) {
    auto s = zeta_hat_num(Index{2}, v, 2, cfg);
    EXPECT_NEAR(s[0].value, pi * pi / 3, 1e-12) << to_string(v);
  }
  auto empty = zeta_hat_num(Index{}, zeta_variant::sh, 1, cfg);
  EXPECT_DOUBLE_EQ(empty[0].value, 1);
  EXPECT_THROW(zeta_hat_num(Index{2}, zeta_variant::sh, -1, cfg), domain_error);
  EXPECT_EQ(parse_zeta_variant("star_KY"), zeta_variant::star_ky);
  EXPECT_THROW(parse_zeta_variant("ky"), std::invalid_argument);
}

TEST(ZetaHat, StarValuesAreSumsOverStarExpansion) {
  EvalConfig cfg;
  for (const Index& k : indices_up_to_weight(4)) {
    for (auto [star, plain] : {std::pair{zeta_variant::star_sh, zeta_variant::sh},
                               std::pair{zeta_variant::star_ast, zeta_variant::ast}}) {
      double lhs = zeta_hat_num(k, star, 0, cfg)[0].value;
      double rhs = 0;
      for (const auto& [l, c] : star_expand(k)) rhs += c.get_d() * zeta_hat_num(l, plain, 0, cfg)[0].value;
      EXPECT_NEAR(lhs, rhs, 1e-10) << k.str();
    }
  }
}

TEST(ZetaHat, KyInverseUndoesStarExpansion) {
  EvalConfig cfg;
  for (const Index& k : indices_up_to_weight(4)) {
    auto ky = zeta_hat_num(k, zeta_variant::star_ky, 2, cfg);
    NumericSeries<double> back(2);
    for (const auto& [l, c] : star_expand(k)) back.add_shifted(zeta_hat_num(l, zeta_variant::ky_inv, 2, cfg), 0, c.get_d());
    for (int n = 0; n <= 2; ++n) EXPECT_NEAR(back[n].value, ky[n].value, 1e-10) << k.str();
  }
}

TEST(Csf, ClassicalToWeight5) {
  EvalConfig cfg = cfg_with_tol(1e-6);
  for (const Index& k : indices_up_to_weight(5)) {
    Report rep = verify_csf(csf_check::mzsv, k, 0, cfg);
    EXPECT_TRUE(rep.pass) << k.str() << "\n" << rep.detail;
    EXPECT_LT(rep.max_residual(), 1e-10) << k.str();
  }
}

TEST(Csf, TAdicToWeight3) {
  EvalConfig cfg = cfg_with_tol(1e-5);
  for (const Index& k : indices_up_to_weight(3)) {
    for (csf_check c : {csf_check::tsmzsv, csf_check::tsmzv_exact}) {
      Report rep = verify_csf(c, k, 2, cfg);
      EXPECT_TRUE(rep.pass) << to_string(c) << " " << k.str() << "\n" << rep.detail;
      EXPECT_EQ(rep.residuals.size(), 3u);
    }
  }
}

TEST(Csf, OnesTraceTerm) {
  EvalConfig cfg;
  EXPECT_NEAR(detail::ones_correction<double>(Index{1, 1, 1}, cfg).value, 6 * std::pow(pi, 4) / 90, 1e-12);
  EXPECT_DOUBLE_EQ(detail::ones_correction<double>(Index{1, 1}, cfg).value, 0);
  EXPECT_DOUBLE_EQ(detail::ones_correction<double>(Index{1, 2}, cfg).value, 0);
}

TEST(Csf, Errors) {
  EvalConfig cfg;
  EXPECT_THROW(verify_csf(csf_check::mzsv, Index{}, 0, cfg), domain_error);
  EXPECT_THROW(parse_csf_check("csf"), std::invalid_argument);
  EvalConfig bad;
  bad.N = 1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}
