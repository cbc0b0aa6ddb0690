#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardimer/linrep.hpp"
#include "hardimer/poly.hpp"
#include "hardimer/word.hpp"

namespace hardimer {

/// Exact number of configurations on a nonempty word, through the integer
/// (b3 = r3 = y = 1) specialization of the S_b + S_r representation.
BigInt count_chdc(const Word& word);

/// Running count of configurations on a growing word, kept as a
/// max-normalized nonnegative vector plus an accumulated log scale.
class CountState {
 public:
  /// Starts from the one-letter word `first`.
  explicit CountState(Colour first);

  void push(Colour c);
  std::size_t length() const noexcept { return length_; }
  /// ln D_n for the current word.
  double log_count() const;
  const std::vector<double>& vector() const noexcept { return v_; }
  double log_scale() const noexcept { return log_scale_; }

 private:
  const NumericRep<double>* rep_;
  std::vector<double> v_;
  std::vector<double> scratch_;
  double log_scale_ = 0.0;
  std::size_t length_ = 0;

  void renormalize();
};

/// Xi = (B1(b3=1,y=1) + R1(r3=1,y=1)) / 2, row-major 19 x 19.
std::vector<std::vector<double>> xi_matrix();

struct SpectralReport {
  double dominant = 0.0;
  double second_modulus = 0.0;
  double gap_ratio = 0.0;  // second_modulus / dominant
  unsigned iterations = 0;
  double residual = 0.0;   // ||Xi v - lambda v|| / ||v||
};

/// Power iteration for the Perron root of Xi, then Wielandt deflation with
/// the left eigenvector and a second power pass for the next modulus.
/// Throws Error(Numeric) if the residual stays above tol within max_iter.
SpectralReport xi_spectrum(double tol, unsigned max_iter = 100000);

/// ln f(n) with f(n) = 2 lambda'^T Xi^n gamma', computed with per-step
/// renormalization.
double log_f(unsigned n);
/// (1/n) ln f(n).
double mean_growth(unsigned n);
/// (n, mean_growth(n)) for n = step, 2 step, ..., <= nmax, in one pass.
std::vector<std::pair<unsigned, double>> growth_curve(unsigned nmax, unsigned step);

struct LyapunovOptions {
  std::uint64_t n = 1000;
  std::uint64_t trials = 16;
  std::uint64_t seed = 42;
  unsigned batches = 0;  // > 0: standard error from per-trial batch means
};

struct LyapunovEstimate {
  double alpha_hat = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned batches = 0;
};

/// splitmix64 of (seed, trial): the per-trial generator seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// ln D_n for one trajectory of i.i.d. fair letters drawn from `subseed`.
double trial_log_count(std::uint64_t n, std::uint64_t subseed);

/// Mean and standard error of (1/n) ln D_n over independent trials.
/// Requires n >= 1 and trials >= 2 (Error(Input) otherwise).
LyapunovEstimate lyapunov_estimate(const LyapunovOptions& options);

struct SubadditivityViolation {
  std::string word;
  std::size_t split = 0;
  std::string count, prefix_count, suffix_count;
};

struct SubadditivityReport {
  std::size_t samples = 0;
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  std::vector<SubadditivityViolation> violations;
};

/// Random words of length 2..max_len with a random split point; records
/// every case where count(x) < count(prefix) * count(suffix).
SubadditivityReport subadditivity_check(std::size_t samples, std::size_t max_len, std::uint64_t seed);

nlohmann::ordered_json to_json(const SpectralReport& r);
nlohmann::ordered_json to_json(const LyapunovEstimate& e);
nlohmann::ordered_json to_json(const SubadditivityReport& r);

}  // namespace hardimer
