#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardimer/poly.hpp"
#include "hardimer/word.hpp"

namespace hardimer {

/// Level bound for z_n: 2^n words are visited.
inline constexpr unsigned kMaxZnLevel = 26;

struct TransferParams {
  Rational u{0};
  Rational v{0};
  Rational w{0};
  double gamma_damp = 0.0;
  unsigned n_max = 1;
  bool exact = false;
  bool skip_singular = false;
};

struct ZnLevel {
  unsigned n = 0;
  double z_n = 0.0;
  std::optional<Rational> z_n_exact;  // set in exact mode
  double partial_sum = 0.0;           // sum_{m <= n} e^{-gamma m} Z_m
  double max_abs_reciprocal = 0.0;
  std::size_t singular_count = 0;
};

struct ZnReport {
  bool exact = false;
  TransferParams params;
  std::vector<ZnLevel> levels;
  std::vector<std::string> singular_words;
  std::optional<double> remainder_bound;  // empty when the crude bound diverges
  double growth_estimate = 0.0;
  bool converges = false;
};

/// Z^hcd of a word at (u, v, w) through the S_b + S_r representation.
/// Requires |word| >= 1.
Rational z_hcd(const Word& word, const EvalPoint<Rational>& at);
double z_hcd(const Word& word, const EvalPoint<double>& at);

struct CorollaryCheck {
  Rational lhs;  // a_x(u,v,w) + a_x(v,u,w)
  Rational rhs;  // Z^hcd(x) + Z^hcd(swap x)
  bool holds = false;
};

/// Two-evaluation identity for a word and its colour swap, where a_x is the
/// S_b coefficient of whichever of x, swap(x) starts with b.
CorollaryCheck corollary_check(const Word& word, const EvalPoint<Rational>& at);

/// Sum over all 2^n words of 1 / Z^hcd(-u, -v, w). Singular words are appended
/// to `singular`; without skip_singular the first one raises Error(Singular).
ZnLevel z_n(unsigned n, const TransferParams& params, std::vector<std::string>* singular = nullptr);

/// Single-level report for z_n (partial_sum = e^{-gamma n} Z_n).
ZnReport z_n_report(unsigned n, const TransferParams& params);

/// Levels 1..n_max with damped partial sums, a crude tail bound and a
/// convergence flag.
ZnReport z_partial(const TransferParams& params);

nlohmann::ordered_json to_json(const ZnReport& report);

}  // namespace hardimer
