#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "hardimer/asymptotics.hpp"
#include "hardimer/chdc.hpp"
#include "hardimer/error.hpp"
#include "hardimer/parallel.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hardimer;
using hardimer::testing::brute_force_mean_count;
using hardimer::testing::random_word;

namespace {

double log_bigint(const BigInt& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

TEST(Count, ExactCountsMatchBruteForce) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Word& w : all_words(len)) {
      ASSERT_EQ(count_chdc(w), BigInt(std::to_string(count_configs(w)))) << w.str();
    }
  }
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> len(13, 20);
  for (int t = 0; t < 1000; ++t) {
    const Word w = random_word(rng, len(rng));
    ASSERT_EQ(count_chdc(w), BigInt(std::to_string(count_configs(w)))) << w.str();
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count_chdc(Word::parse("brrb")), 3);
  EXPECT_EQ(count_chdc(Word::parse("bbrr")), 4);
  EXPECT_THROW(count_chdc(Word()), Error);
  const BigInt long_count = count_chdc(Word(std::vector<Colour>(300, Colour::Red)));
  BigInt a = 1, b = 1;
  for (int k = 1; k < 300; ++k) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  EXPECT_EQ(long_count, b);
}

TEST(CountState, RenormalizedLogMatchesBigIntegers) {
  std::mt19937_64 rng(42);
  std::vector<Colour> letters(300);
  for (auto& c : letters) c = (rng() & 1U) ? Colour::Red : Colour::Blue;
  CountState state(letters[0]);
  for (std::size_t n = 1; n <= letters.size(); ++n) {
    if (n > 1) state.push(letters[n - 1]);
    ASSERT_EQ(state.length(), n);
    const double exact = log_bigint(count_chdc(Word(std::vector<Colour>(letters.begin(), letters.begin() + n))));
    EXPECT_NEAR(state.log_count(), exact, 1e-12 * std::max(1.0, exact)) << n;
    for (double x : state.vector()) EXPECT_GE(x, 0.0);
  }
}

TEST(Spectrum, MatchesEigenOracle) {
  const auto xi = xi_matrix();
  ASSERT_EQ(xi.size(), 19u);
  EXPECT_DOUBLE_EQ(xi[0][0], 1.0);
  Eigen::MatrixXd m(19, 19);
  for (int i = 0; i < 19; ++i) {
    for (int j = 0; j < 19; ++j) {
      m(i, j) = xi[i][j];
      EXPECT_GE(xi[i][j], 0.0);
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> moduli;
  for (int i = 0; i < 19; ++i) moduli.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(moduli.rbegin(), moduli.rend());

  const auto rep = xi_spectrum(1e-12);
  EXPECT_NEAR(rep.dominant, 1.5, 1e-9);
  EXPECT_NEAR(rep.dominant, moduli[0], 1e-9);
  EXPECT_LT(rep.residual, 1e-12);
  EXPECT_LT(rep.second_modulus, rep.dominant);
  EXPECT_NEAR(rep.second_modulus, moduli[1], 1e-4);
  EXPECT_LT(moduli[1], moduli[0] - 0.5);
  EXPECT_NEAR(rep.gap_ratio, rep.second_modulus / rep.dominant, 1e-15);
  EXPECT_THROW(xi_spectrum(0.0), Error);
  EXPECT_THROW(xi_spectrum(1e-30, 50), Error);
}

TEST(Growth, AnnealedMeanIsMeanCount) {
  for (unsigned n = 1; n <= 12; ++n) {
    const double expected = std::log(brute_force_mean_count(n).get_d());
    EXPECT_NEAR(log_f(n), expected, 1e-12) << n;
  }
  // f(1) = 2 lambda'^T Xi gamma'
  EXPECT_NEAR(log_f(1), 0.0, 1e-15);
}

TEST(Growth, CurveMatchesPointwiseAndStabilizes) {
  const auto curve = growth_curve(400, 10);
  ASSERT_EQ(curve.size(), 40u);
  for (const auto& [n, g] : curve) EXPECT_EQ(g, mean_growth(n));
  EXPECT_TRUE(growth_curve(5, 10).empty());
  double prev = INFINITY;
  for (unsigned n = 50; n <= 400; n += 25) {
    const double gap = std::abs(mean_growth(2 * n) - mean_growth(n));
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LT(mean_growth(400), std::log(1.5));
  EXPECT_THROW(log_f(0), Error);
}

TEST(Growth, AnnealedConsistencyWithSampledWords) {
  // mean of D_n over random words against f(n)
  constexpr unsigned n = 24;
  constexpr int samples = 20000;
  std::mt19937_64 rng(43);
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < samples; ++t) {
    const double d = count_chdc(random_word(rng, n)).get_d();
    sum += d;
    sum_sq += d * d;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
  EXPECT_NEAR(std::log(mean), log_f(n), 4.0 * se / mean);
}

TEST(Lyapunov, Bounds) {
  const auto a = lyapunov_estimate({10000, 64, 42, 0});
  EXPECT_GT(a.alpha_hat, 0.0);
  EXPECT_GE(a.std_error, 0.0);
  EXPECT_LE(a.alpha_hat, std::log(1.5) + 3 * a.std_error);
  const auto b = lyapunov_estimate({10000, 64, 4242, 0});
  EXPECT_LE(std::abs(a.alpha_hat - b.alpha_hat), 3 * std::hypot(a.std_error, b.std_error));
  EXPECT_EQ(a.trials, 64u);
  EXPECT_EQ(a.seed, 42u);
}

TEST(Lyapunov, ReproducibleAcrossThreadCounts) {
  const unsigned old = thread_count();
  set_thread_count(1);
  const auto one = lyapunov_estimate({2000, 12, 7, 0});
  const double first_trial = trial_log_count(2000, trial_seed(7, 0));
  set_thread_count(5);
  const auto five = lyapunov_estimate({2000, 12, 7, 0});
  set_thread_count(old);
  EXPECT_EQ(one.alpha_hat, five.alpha_hat);
  EXPECT_EQ(one.std_error, five.std_error);
  EXPECT_EQ(trial_log_count(2000, trial_seed(7, 0)), first_trial);
  EXPECT_NE(trial_seed(7, 0), trial_seed(7, 1));
  EXPECT_NE(trial_seed(7, 0), trial_seed(8, 0));
}

TEST(Lyapunov, BatchMeans) {
  const auto plain = lyapunov_estimate({4000, 8, 9, 0});
  const auto batched = lyapunov_estimate({4000, 8, 9, 10});
  EXPECT_EQ(plain.alpha_hat, batched.alpha_hat);
  EXPECT_GT(batched.std_error, 0.0);
  EXPECT_EQ(batched.batches, 10u);
}

TEST(Lyapunov, RejectsBadInput) {
  EXPECT_THROW(lyapunov_estimate({0, 10, 1, 0}), Error);
  EXPECT_THROW(lyapunov_estimate({10, 1, 1, 0}), Error);
  EXPECT_THROW(trial_log_count(0, 1), Error);
}

TEST(Subadditivity, Examples) {
  const Word bbrr = Word::parse("bbrr");
  EXPECT_GE(count_chdc(bbrr), count_chdc(bbrr.prefix(2)) * count_chdc(bbrr.suffix_from(2)));
  EXPECT_EQ(count_chdc(Word::parse("br")), 1);
  const auto r = subadditivity_check(1000, 16, 42);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.samples, 1000u);
  EXPECT_THROW(subadditivity_check(10, 1, 42), Error);
}

TEST(AsymptoticsJson, KeyOrder) {
  const auto j = to_json(LyapunovEstimate{0.4, 0.01, 100, 4, 42, 0});
  EXPECT_EQ(j.dump(), R"({"alpha_hat":0.4,"stderr":0.01,"n":100,"trials":4,"seed":42,"batches":0})");
  const auto s = to_json(SpectralReport{1.5, 0.5, 1.0 / 3, 10, 1e-13});
  EXPECT_EQ(s.begin().key(), "dominant");
}
