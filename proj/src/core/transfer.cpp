#include "hardimer/transfer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <type_traits>

#include "hardimer/error.hpp"
#include "hardimer/linrep.hpp"
#include "hardimer/parallel.hpp"

namespace hardimer {

namespace {

// Words starting with b only see the S_b block of the sum representation and
// words starting with r only the S_r block, so each word is evaluated on its
// own 19-dimensional block.
template <class T>
struct BlockReps {
  NumericRep<T> sb, sr;
  explicit BlockReps(const EvalPoint<T>& at)
      : sb(builtin_rep(RepKind::Sb).specialize(at)), sr(builtin_rep(RepKind::Sr).specialize(at)) {}
  const NumericRep<T>& for_first(Colour c) const { return c == Colour::Blue ? sb : sr; }
};

template <class T>
T z_hcd_impl(const Word& word, const EvalPoint<T>& at) {
  if (word.empty()) fail(ErrorKind::Domain, "z_hcd needs a nonempty word");
  const BlockReps<T> reps(at);
  return reps.for_first(word[0]).coefficient(word);
}

double to_double(const Rational& q) { return q.get_d(); }
double to_double(double d) { return d; }

template <class T>
struct ChunkResult {
  T sum{0};
  double compensation = 0.0;  // Neumaier term, floating mode only
  double max_abs_reciprocal = 0.0;
  std::vector<std::string> singular;
};

template <class T>
void accumulate(ChunkResult<T>& acc, const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    const double t = acc.sum + x;
    if (std::abs(acc.sum) >= std::abs(x)) acc.compensation += (acc.sum - t) + x;
    else acc.compensation += (x - t) + acc.sum;
    acc.sum = t;
  } else {
    acc.sum += x;
  }
}

template <class T>
ChunkResult<T> sum_chunk(const BlockReps<T>& reps, unsigned n, unsigned prefix_len, std::uint64_t prefix_bits,
                         bool skip_singular) {
  ChunkResult<T> res;
  const Word prefix = word_from_bits(prefix_bits, prefix_len);
  const NumericRep<T>& rep = reps.for_first(prefix[0]);
  const unsigned rest = n - prefix_len;

  std::vector<std::vector<T>> level(rest + 1);
  level[0] = rep.lambda();
  std::vector<T> tmp;
  for (Colour c : prefix.letters()) {
    rep.step(level[0], c, tmp);
    level[0].swap(tmp);
  }
  for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << rest); ++tail) {
    // Recompute only the levels below the highest changed bit.
    unsigned from = 0;
    if (tail != 0) {
      const std::uint64_t changed = tail ^ (tail - 1);
      from = rest - static_cast<unsigned>(std::bit_width(changed));
    }
    for (unsigned d = from; d < rest; ++d) {
      const Colour c = ((tail >> (rest - 1 - d)) & 1U) ? Colour::Red : Colour::Blue;
      rep.step(level[d], c, level[d + 1]);
    }
    const T den = rep.dot_gamma(level[rest]);
    if (den == T(0)) {
      const std::string w = prefix.concat(word_from_bits(tail, rest)).str();
      if (!skip_singular) fail(ErrorKind::Singular, "Z^hcd vanishes on word \"" + w + "\"");
      res.singular.push_back(w);
      continue;
    }
    const T rec = T(1) / den;
    res.max_abs_reciprocal = std::max(res.max_abs_reciprocal, std::abs(to_double(rec)));
    accumulate(res, rec);
  }
  return res;
}

template <class T>
ZnLevel z_n_impl(unsigned n, const EvalPoint<T>& at, bool skip_singular, std::vector<std::string>* singular) {
  const BlockReps<T> reps(at);
  // Fixed chunking by prefix, independent of the thread count.
  const unsigned prefix_len = std::min(n, 10U);
  const std::size_t chunks = std::size_t{1} << prefix_len;
  std::vector<ChunkResult<T>> parts(chunks);
  parallel_for(chunks, [&](std::size_t i) { parts[i] = sum_chunk(reps, n, prefix_len, i, skip_singular); });

  ZnLevel level;
  level.n = n;
  ChunkResult<T> total;
  for (auto& part : parts) {
    accumulate(total, part.sum);
    total.compensation += part.compensation;
    level.max_abs_reciprocal = std::max(level.max_abs_reciprocal, part.max_abs_reciprocal);
    level.singular_count += part.singular.size();
    if (singular) singular->insert(singular->end(), part.singular.begin(), part.singular.end());
  }
  if constexpr (std::is_same_v<T, double>) {
    level.z_n = total.sum + total.compensation;
  } else {
    level.z_n = total.sum.get_d();
    level.z_n_exact = total.sum;
  }
  return level;
}

std::optional<double> finite_or_empty(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

}  // namespace

Rational z_hcd(const Word& word, const EvalPoint<Rational>& at) { return z_hcd_impl(word, at); }
double z_hcd(const Word& word, const EvalPoint<double>& at) { return z_hcd_impl(word, at); }

CorollaryCheck corollary_check(const Word& word, const EvalPoint<Rational>& at) {
  if (word.empty()) fail(ErrorKind::Domain, "corollary_check needs a nonempty word");
  const Word rep_word = word[0] == Colour::Blue ? word : word.swapped();
  const Poly a = builtin_rep(RepKind::Sb).coefficient(rep_word);
  CorollaryCheck out;
  out.lhs = a.eval(at) + a.eval({at.v, at.u, at.w});
  out.rhs = z_hcd(word, at) + z_hcd(word.swapped(), at);
  out.holds = out.lhs == out.rhs;
  return out;
}

ZnLevel z_n(unsigned n, const TransferParams& params, std::vector<std::string>* singular) {
  if (n < 1 || n > kMaxZnLevel) {
    fail(ErrorKind::Resource, "z_n level must lie in 1.." + std::to_string(kMaxZnLevel) + " (got " +
                                  std::to_string(n) + ")");
  }
  if (params.exact) {
    const EvalPoint<Rational> at{-params.u, -params.v, params.w};
    return z_n_impl<Rational>(n, at, params.skip_singular, singular);
  }
  const EvalPoint<double> at{-params.u.get_d(), -params.v.get_d(), params.w.get_d()};
  if (!std::isfinite(at.u) || !std::isfinite(at.v) || !std::isfinite(at.w)) {
    fail(ErrorKind::Input, "evaluation point is not representable as finite doubles");
  }
  return z_n_impl<double>(n, at, params.skip_singular, singular);
}

ZnReport z_n_report(unsigned n, const TransferParams& params) {
  ZnReport report;
  report.exact = params.exact;
  report.params = params;
  report.params.n_max = n;
  ZnLevel level = z_n(n, params, &report.singular_words);
  level.partial_sum = std::exp(-params.gamma_damp * n) * level.z_n;
  report.levels.push_back(std::move(level));
  return report;
}

ZnReport z_partial(const TransferParams& params) {
  if (params.n_max < 1) fail(ErrorKind::Input, "n_max must be >= 1");
  if (!std::isfinite(params.gamma_damp)) fail(ErrorKind::Input, "gamma must be finite");
  ZnReport report;
  report.exact = params.exact;
  report.params = params;
  double partial = 0.0;
  double max_rec = 0.0;
  for (unsigned n = 1; n <= params.n_max; ++n) {
    ZnLevel level = z_n(n, params, &report.singular_words);
    partial += std::exp(-params.gamma_damp * n) * level.z_n;
    level.partial_sum = partial;
    max_rec = std::max(max_rec, level.max_abs_reciprocal);
    report.levels.push_back(std::move(level));
  }

  // |Z_n| <= 2^n max|1/Z^hcd|: tail sum of a geometric series with ratio 2 e^{-gamma}.
  const double q = 2.0 * std::exp(-params.gamma_damp);
  if (q < 1.0) {
    report.remainder_bound = finite_or_empty(max_rec * std::pow(q, params.n_max + 1) / (1.0 - q));
  }
  const auto& first = report.levels.front();
  const auto& last = report.levels.back();
  if (params.n_max > 1 && first.max_abs_reciprocal > 0.0 && last.max_abs_reciprocal > 0.0) {
    report.growth_estimate = std::max(
        0.0, (std::log(last.max_abs_reciprocal) - std::log(first.max_abs_reciprocal)) / (params.n_max - 1));
  }
  report.converges = params.gamma_damp > std::log(2.0) + report.growth_estimate;
  return report;
}

nlohmann::ordered_json to_json(const ZnReport& report) {
  using json = nlohmann::ordered_json;
  json levels = json::array();
  for (const auto& l : report.levels) {
    json entry = {{"n", l.n}, {"z_n", l.z_n}};
    if (l.z_n_exact) entry["z_n_exact"] = l.z_n_exact->get_str();
    entry["partial_sum"] = l.partial_sum;
    entry["max_abs_reciprocal"] = l.max_abs_reciprocal;
    entry["singular_count"] = l.singular_count;
    levels.push_back(std::move(entry));
  }
  json out = {{"mode", report.exact ? "exact" : "float"},
              {"u", report.params.u.get_str()},
              {"v", report.params.v.get_str()},
              {"w", report.params.w.get_str()},
              {"gamma", report.params.gamma_damp},
              {"n_max", report.params.n_max},
              {"levels", std::move(levels)},
              {"singular_words", report.singular_words}};
  out["remainder_bound"] = report.remainder_bound ? json(*report.remainder_bound) : json(nullptr);
  out["growth_estimate"] = report.growth_estimate;
  out["converges"] = report.converges;
  return out;
}

}  // namespace hardimer
