#include "hardimer/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <tuple>

#include "hardimer/error.hpp"
#include "hardimer/parallel.hpp"

namespace hardimer {

namespace {

constexpr EvalPoint<double> kOnes{1.0, 1.0, 1.0};

const NumericRep<double>& ones_block(Colour first) {
  static const NumericRep<double> sb = builtin_rep(RepKind::Sb).specialize(kOnes);
  static const NumericRep<double> sr = builtin_rep(RepKind::Sr).specialize(kOnes);
  return first == Colour::Blue ? sb : sr;
}

NumericRep<BigInt> integer_block(Colour first) {
  const LinRep& rep = builtin_rep(first == Colour::Blue ? RepKind::Sb : RepKind::Sr);
  const auto q = rep.specialize(EvalPoint<Rational>{Rational(1), Rational(1), Rational(1)});
  auto vec = [](const std::vector<Rational>& v) {
    std::vector<BigInt> out;
    for (const auto& x : v) out.push_back(x.get_num());
    return out;
  };
  auto entries = [](const std::vector<SparseEntry<Rational>>& es) {
    std::vector<SparseEntry<BigInt>> out;
    for (const auto& e : es) out.push_back({e.row, e.col, e.value.get_num()});
    return out;
  };
  return NumericRep<BigInt>(vec(q.lambda()), entries(q.entries(Colour::Blue)), entries(q.entries(Colour::Red)),
                            vec(q.gamma()));
}

using Dense = std::vector<std::vector<double>>;

std::vector<double> mat_vec(const Dense& m, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

Dense transpose(const Dense& m) {
  Dense t(m[0].size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

struct PowerResult {
  double value;
  std::vector<double> vec;
  unsigned iterations;
  double residual;
};

PowerResult power_iterate(const Dense& m, double tol, unsigned max_iter) {
  std::vector<double> x(m.size(), 1.0);
  double residual = INFINITY, value = 0.0;
  for (unsigned it = 1; it <= max_iter; ++it) {
    auto y = mat_vec(m, x);
    value = dot(x, y) / dot(x, x);
    std::vector<double> r(y);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= value * x[i];
    residual = norm2(r) / norm2(x);
    if (residual < tol) return {value, x, it, residual};
    const double s = max_abs(y);
    if (!(s > 0.0) || !std::isfinite(s)) break;
    for (auto& v : y) v /= s;
    x.swap(y);
  }
  fail(ErrorKind::Numeric, "power iteration did not reach tolerance " + std::to_string(tol) +
                               " (residual " + std::to_string(residual) + ")");
}

struct TrialOutcome {
  double log_count;
  std::vector<double> batch_rates;
};

class LetterStream {
 public:
  explicit LetterStream(std::uint64_t seed) : gen_(seed) {}
  Colour next() {
    if (left_ == 0) {
      bits_ = gen_();
      left_ = 64;
    }
    const Colour c = (bits_ & 1U) ? Colour::Red : Colour::Blue;
    bits_ >>= 1;
    --left_;
    return c;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t bits_ = 0;
  unsigned left_ = 0;
};

TrialOutcome run_trial(std::uint64_t n, std::uint64_t subseed, unsigned batches) {
  LetterStream letters(subseed);
  CountState state(letters.next());
  TrialOutcome out{0.0, {}};
  std::uint64_t prev_len = 0;
  double prev_log = 0.0;
  unsigned next_batch = 1;
  auto checkpoint = [&](std::uint64_t len) {
    while (batches > 0 && next_batch <= batches && len == (n * next_batch) / batches) {
      if (len > prev_len) {
        const double l = state.log_count();
        out.batch_rates.push_back((l - prev_log) / static_cast<double>(len - prev_len));
        prev_log = l;
        prev_len = len;
      }
      ++next_batch;
    }
  };
  checkpoint(1);
  for (std::uint64_t len = 2; len <= n; ++len) {
    state.push(letters.next());
    checkpoint(len);
  }
  out.log_count = state.log_count();
  return out;
}

}  // namespace

BigInt count_chdc(const Word& word) {
  if (word.empty()) fail(ErrorKind::Domain, "count_chdc needs a nonempty word");
  static const NumericRep<BigInt> sb = integer_block(Colour::Blue);
  static const NumericRep<BigInt> sr = integer_block(Colour::Red);
  return (word[0] == Colour::Blue ? sb : sr).coefficient(word);
}

CountState::CountState(Colour first) : rep_(&ones_block(first)) {
  rep_->step(rep_->lambda(), first, v_);
  length_ = 1;
  for (double x : v_) {
    if (x < 0.0) fail(ErrorKind::Internal, "CountState: negative entry after the first letter");
  }
  renormalize();
}

void CountState::push(Colour c) {
  rep_->step(v_, c, scratch_);
  v_.swap(scratch_);
  ++length_;
  renormalize();
}

void CountState::renormalize() {
  const double m = max_abs(v_);
  if (!(m > 0.0) || !std::isfinite(m)) fail(ErrorKind::Numeric, "CountState: degenerate state vector");
  for (auto& x : v_) x /= m;
  log_scale_ += std::log(m);
}

double CountState::log_count() const { return std::log(rep_->dot_gamma(v_)) + log_scale_; }

std::vector<std::vector<double>> xi_matrix() {
  const LinRep& rep = builtin_rep(RepKind::Sb);
  const std::size_t d = rep.dim();
  Dense xi(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      xi[i][j] = 0.5 * (rep.mat(Colour::Blue)(i, j).eval(kOnes) + rep.mat(Colour::Red)(i, j).eval(kOnes));
    }
  }
  return xi;
}

SpectralReport xi_spectrum(double tol, unsigned max_iter) {
  if (!(tol > 0.0)) fail(ErrorKind::Input, "tolerance must be positive");
  const Dense xi = xi_matrix();
  const PowerResult right = power_iterate(xi, tol, max_iter);
  const PowerResult left = power_iterate(transpose(xi), tol, max_iter);

  // Wielandt deflation: remove the Perron direction and keep projecting it out
  // so rounding cannot reintroduce it.
  const double wv = dot(left.vec, right.vec);
  if (!(std::abs(wv) > 0.0)) fail(ErrorKind::Numeric, "left and right Perron vectors are orthogonal");
  auto project = [&](std::vector<double>& z) {
    const double c = dot(left.vec, z) / wv;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= c * right.vec[i];
  };
  std::vector<double> z(xi.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = 1.0 / static_cast<double>(i + 1) + static_cast<double>(i % 3);
  project(z);
  const unsigned steps = 4000;
  double log_growth = 0.0;
  unsigned counted = 0;
  double second = 0.0;
  for (unsigned k = 1; k <= steps; ++k) {
    auto y = mat_vec(xi, z);
    project(y);
    const double nz = norm2(z), ny = norm2(y);
    if (!(ny > 1e-300 * nz)) {
      second = 0.0;  // nilpotent on the complement
      counted = 0;
      break;
    }
    if (k > steps / 2) {
      log_growth += std::log(ny / nz);
      ++counted;
    }
    for (auto& v : y) v /= ny;
    z.swap(y);
  }
  if (counted > 0) second = std::exp(log_growth / counted);

  SpectralReport rep;
  rep.dominant = right.value;
  rep.second_modulus = second;
  rep.gap_ratio = second / right.value;
  rep.iterations = right.iterations;
  rep.residual = right.residual;
  return rep;
}

namespace {

// Advances the annealed row vector by `steps` multiplications with Xi.
class AnnealedState {
 public:
  AnnealedState() : xi_(xi_matrix()) {
    const auto& rep = builtin_rep(RepKind::Sb);
    for (const auto& p : rep.lambda()) v_.push_back(p.eval(kOnes));
    for (const auto& p : rep.gamma()) gamma_.push_back(p.eval(kOnes));
  }

  void step() {
    std::vector<double> out(v_.size(), 0.0);
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] == 0.0) continue;
      for (std::size_t j = 0; j < v_.size(); ++j) out[j] += v_[i] * xi_[i][j];
    }
    const double m = max_abs(out);
    if (!(m > 0.0)) fail(ErrorKind::Numeric, "annealed vector vanished");
    for (auto& x : out) x /= m;
    v_.swap(out);
    log_scale_ += std::log(m);
  }

  double log_f() const {
    const double g = dot(v_, gamma_);
    if (!(g > 0.0)) fail(ErrorKind::Numeric, "lambda'^T Xi^n gamma' is not positive");
    return std::log(2.0) + std::log(g) + log_scale_;
  }

 private:
  Dense xi_;
  std::vector<double> v_, gamma_;
  double log_scale_ = 0.0;
};

}  // namespace

double log_f(unsigned n) {
  if (n < 1) fail(ErrorKind::Input, "log_f needs n >= 1");
  AnnealedState s;
  for (unsigned i = 0; i < n; ++i) s.step();
  return s.log_f();
}

double mean_growth(unsigned n) { return log_f(n) / static_cast<double>(n); }

std::vector<std::pair<unsigned, double>> growth_curve(unsigned nmax, unsigned step) {
  if (step < 1) fail(ErrorKind::Input, "growth_curve step must be >= 1");
  std::vector<std::pair<unsigned, double>> out;
  AnnealedState s;
  for (unsigned n = 1; n <= nmax; ++n) {
    s.step();
    if (n % step == 0) out.emplace_back(n, s.log_f() / static_cast<double>(n));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double trial_log_count(std::uint64_t n, std::uint64_t subseed) {
  if (n < 1) fail(ErrorKind::Input, "trial length must be >= 1");
  return run_trial(n, subseed, 0).log_count;
}

LyapunovEstimate lyapunov_estimate(const LyapunovOptions& options) {
  if (options.n < 1) fail(ErrorKind::Input, "lyapunov: n must be >= 1");
  if (options.trials < 2) fail(ErrorKind::Input, "lyapunov: at least 2 trials are needed for an error bar");
  if (options.batches > options.n) fail(ErrorKind::Input, "lyapunov: more batches than letters");
  std::vector<TrialOutcome> outcomes(options.trials);
  parallel_for(options.trials, [&](std::size_t t) {
    outcomes[t] = run_trial(options.n, trial_seed(options.seed, t), options.batches);
  });

  auto mean_and_se = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    return std::pair{mean, std::sqrt(var / static_cast<double>(xs.size()))};
  };

  std::vector<double> rates;
  for (const auto& o : outcomes) rates.push_back(o.log_count / static_cast<double>(options.n));
  LyapunovEstimate est;
  std::tie(est.alpha_hat, est.std_error) = mean_and_se(rates);
  if (options.batches > 0) {
    std::vector<double> batch;
    for (const auto& o : outcomes) batch.insert(batch.end(), o.batch_rates.begin(), o.batch_rates.end());
    if (batch.size() >= 2) est.std_error = mean_and_se(batch).second;
  }
  est.n = options.n;
  est.trials = options.trials;
  est.seed = options.seed;
  est.batches = options.batches;
  return est;
}

SubadditivityReport subadditivity_check(std::size_t samples, std::size_t max_len, std::uint64_t seed) {
  if (max_len < 2 || max_len > 62) fail(ErrorKind::Input, "subadditivity_check: max_len must lie in 2..62");
  SubadditivityReport report;
  report.samples = samples;
  report.max_len = max_len;
  report.seed = seed;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> length_dist(2, max_len);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t len = length_dist(gen);
    const std::uint64_t bits = gen() & ((std::uint64_t{1} << len) - 1);
    const Word w = word_from_bits(bits, len);
    const std::size_t split = std::uniform_int_distribution<std::size_t>(1, len - 1)(gen);
    const BigInt whole = count_chdc(w);
    const BigInt pre = count_chdc(w.prefix(split));
    const BigInt suf = count_chdc(w.suffix_from(split));
    if (whole < pre * suf) {
      report.violations.push_back({w.str(), split, whole.get_str(), pre.get_str(), suf.get_str()});
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const SpectralReport& r) {
  return {{"dominant", r.dominant},
          {"second_modulus", r.second_modulus},
          {"gap_ratio", r.gap_ratio},
          {"iterations", r.iterations},
          {"residual", r.residual}};
}

nlohmann::ordered_json to_json(const LyapunovEstimate& e) {
  return {{"alpha_hat", e.alpha_hat}, {"stderr", e.std_error}, {"n", e.n},
          {"trials", e.trials},       {"seed", e.seed},        {"batches", e.batches}};
}

nlohmann::ordered_json to_json(const SubadditivityReport& r) {
  auto v = nlohmann::ordered_json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"word", x.word}, {"split", x.split}, {"count", x.count},
                 {"prefix_count", x.prefix_count}, {"suffix_count", x.suffix_count}});
  }
  return {{"samples", r.samples}, {"max_len", r.max_len}, {"seed", r.seed}, {"violations", std::move(v)}};
}

}  // namespace hardimer
