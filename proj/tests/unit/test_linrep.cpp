#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "hardimer/chdc.hpp"
#include "hardimer/derive.hpp"
#include "hardimer/error.hpp"
#include "hardimer/linrep.hpp"
#include "hardimer/solve.hpp"
#include "support.hpp"

using namespace hardimer;
using hardimer::testing::random_word;

namespace {

const Poly b3 = Poly::b3();
const Poly r3 = Poly::r3();
const Poly y = Poly::y();

}  // namespace

TEST(LinRep, BuiltinSbEntries) {
  const LinRep& rep = builtin_rep(RepKind::Sb);
  ASSERT_EQ(rep.dim(), 19u);
  // 1-based positions
  EXPECT_EQ(rep.mat(Colour::Blue)(0, 4), b3);
  EXPECT_EQ(rep.mat(Colour::Blue)(0, 14), b3 * y);
  EXPECT_EQ(rep.mat(Colour::Red)(0, 2), r3);
  EXPECT_EQ(rep.mat(Colour::Red)(0, 6), r3 * y);
  EXPECT_EQ(rep.lambda()[0], Poly(1));
  EXPECT_EQ(rep.lambda()[2], Poly(-1));
  EXPECT_EQ(rep.lambda()[9], -(r3 * y));
  EXPECT_EQ(rep.lambda()[10], -r3);
  EXPECT_EQ(rep.mat(Colour::Blue)(0, 0).eval(EvalPoint<Rational>{1, 1, 1}), 1);
  EXPECT_EQ(rep.mat(Colour::Red)(0, 0).eval(EvalPoint<Rational>{1, 1, 1}), 1);
}

TEST(LinRep, BuiltinSr) {
  const LinRep& sb = builtin_rep(RepKind::Sb);
  const LinRep& sr = builtin_rep(RepKind::Sr);
  EXPECT_EQ(sr.mat(Colour::Red)(0, 4), r3);
  EXPECT_EQ(sr.gamma(), sb.gamma());
  EXPECT_EQ(sr.coefficient(Word::parse("rb")), sb.coefficient(Word::parse("br")).swap_colours());
  EXPECT_EQ(sr, colour_swapped(sb));
}

TEST(LinRep, BuiltinSum) {
  const LinRep& rep = builtin_rep(RepKind::Sum);
  ASSERT_EQ(rep.dim(), 38u);
  EXPECT_EQ(rep.coefficient(Word::parse("b")), Poly(1));
  EXPECT_EQ(rep.coefficient(Word::parse("r")), Poly(1));
  EXPECT_EQ(rep.coefficient(Word::parse("bb")), 1 + b3);
  for (std::size_t i = 0; i < 19; ++i) {
    for (std::size_t j = 19; j < 38; ++j) {
      for (Colour c : {Colour::Blue, Colour::Red}) {
        EXPECT_TRUE(rep.mat(c)(i, j).is_zero());
        EXPECT_TRUE(rep.mat(c)(j, i).is_zero());
      }
    }
  }
  const Word fig = Word::parse("rbrrbrbbrbrb");
  const Poly c = rep.coefficient(fig);
  EXPECT_EQ(c, census(fig));
  EXPECT_GE(c.coefficient(Monomial{2, 1, 3}), 1);
}

TEST(LinRep, CoefficientBasics) {
  const LinRep& sb = builtin_rep(RepKind::Sb);
  EXPECT_EQ(sb.coefficient(Word::parse("b")), Poly(1));
  EXPECT_TRUE(sb.coefficient(Word::parse("rb")).is_zero());
  EXPECT_THROW(sb.coefficient(Word()), Error);
}

TEST(LinRep, AgreesWithCensusUpToTen) {
  const LinRep& rep = builtin_rep(RepKind::Sum);
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const Word& w : all_words(len)) EXPECT_EQ(rep.coefficient(w), census(w)) << w.str();
  }
}

TEST(LinRep, SupportOnFirstLetter) {
  const LinRep& sb = builtin_rep(RepKind::Sb);
  const LinRep& sr = builtin_rep(RepKind::Sr);
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const Word& w : all_words(len)) {
      if (w[0] == Colour::Red) EXPECT_TRUE(sb.coefficient(w).is_zero()) << w.str();
      if (w[0] == Colour::Blue) EXPECT_TRUE(sr.coefficient(w).is_zero()) << w.str();
    }
  }
}

TEST(LinRep, Homomorphism) {
  const LinRep& rep = builtin_rep(RepKind::Sum);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> len(1, 14);
  for (int t = 0; t < 60; ++t) {
    const Word x = random_word(rng, len(rng)), z = random_word(rng, len(rng));
    auto v = rep.row_after(x);
    for (Colour c : z.letters()) v = rep.step(v, c);
    Poly total;
    for (std::size_t i = 0; i < v.size(); ++i) total.add_product(v[i], rep.gamma()[i]);
    EXPECT_EQ(total, rep.coefficient(x.concat(z)));
  }
}

TEST(LinRep, NumericSpecializationIsFast) {
  const auto num = builtin_rep(RepKind::Sb).specialize(EvalPoint<double>{1.0, 1.0, 1.0});
  std::mt19937_64 rng(22);
  std::vector<Colour> letters(1000);
  for (auto& c : letters) c = (rng() & 1U) ? Colour::Red : Colour::Blue;
  letters[0] = Colour::Blue;
  const Word w(letters);
  const auto t0 = std::chrono::steady_clock::now();
  const double c = num.coefficient(w);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_GT(c, 1e100);
  EXPECT_LT(secs, 1.0);
  const auto exact = builtin_rep(RepKind::Sb).specialize(EvalPoint<Rational>{1, 1, 1});
  EXPECT_NEAR(std::log(c), std::log(exact.coefficient(w).get_d()), 1e-9);
}

TEST(LinRep, CompareAndJson) {
  const LinRep& sb = builtin_rep(RepKind::Sb);
  EXPECT_TRUE(compare_reps(sb, sb).empty());
  const auto diffs = compare_reps(sb, builtin_rep(RepKind::Sr));
  EXPECT_FALSE(diffs.empty());
  EXPECT_EQ(to_json(std::vector<RepDiscrepancy>{}).dump(), "[]");
  const auto j = to_json(sb);
  EXPECT_EQ(j["dim"], 19);
  EXPECT_EQ(j["mu_b"].size(), 19u);
  EXPECT_EQ(j["mu_b"][0].size(), 19u);
  EXPECT_EQ(poly_from_json(j["mu_b"][0][4]), b3);
  EXPECT_EQ(poly_from_json(j["lambda"][9]), -(r3 * y));
  EXPECT_EQ(to_json(builtin_rep(RepKind::Sum))["dim"], 38);
  const auto dj = to_json(diffs);
  EXPECT_TRUE(dj[0].contains("row"));
  EXPECT_TRUE(dj[0].contains("expected"));
}

TEST(Derive, GeneratorsAreDistinct) {
  const auto gens = stable_generators();
  ASSERT_EQ(gens.size(), 19u);
  EXPECT_TRUE(gens[0].empty());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) EXPECT_NE(gens[i], gens[j]);
  }
  EXPECT_FALSE(describe(gens[1]).empty());
}

TEST(Derive, MatchesBuiltinMatrices) {
  const LinRep derived = derive_rep();
  const auto diffs = compare_reps(builtin_rep(RepKind::Sb), derived);
  EXPECT_TRUE(diffs.empty()) << to_json(diffs).dump(2);
}

TEST(Derive, FullBasisHasVanishingFirstRowAndColumn) {
  const auto full = derive_basis_rep();
  ASSERT_EQ(full.lambda.size(), 20u);
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_TRUE(full.mat_b(0, k).is_zero());
    EXPECT_TRUE(full.mat_b(k, 0).is_zero());
    EXPECT_TRUE(full.mat_r(0, k).is_zero());
    EXPECT_TRUE(full.mat_r(k, 0).is_zero());
  }
  // S_b = -T_1 + T_2 - T_4 - r3 y T_11 - r3 T_12
  EXPECT_EQ(full.lambda[0], Poly(-1));
  EXPECT_EQ(full.lambda[1], Poly(1));
  EXPECT_EQ(full.lambda[3], Poly(-1));
  EXPECT_EQ(full.lambda[10], -(r3 * y));
  EXPECT_EQ(full.lambda[11], -r3);
}
