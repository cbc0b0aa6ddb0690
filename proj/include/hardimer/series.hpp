#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "hardimer/poly.hpp"
#include "hardimer/word.hpp"

namespace hardimer {

/// Longest truncation accepted by TruncatedSeries (2^(L+1) - 1 coefficient slots).
inline constexpr std::size_t kMaxSeriesLength = 22;

/// Noncommutative formal series over K in the letters b, r, known exactly
/// for every word of length <= max_len.
///
/// Coefficients are stored densely in length-then-lex word order
/// (see word_index). Products and stars are exact up to max_len; anything
/// beyond the truncation is invisible.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t max_len = 0);

  static TruncatedSeries one(std::size_t max_len);
  static TruncatedSeries constant(std::size_t max_len, const Poly& k);
  static TruncatedSeries letter(std::size_t max_len, Colour c);
  /// k * word; zero if the word is longer than max_len.
  static TruncatedSeries monomial(std::size_t max_len, const Word& w, const Poly& k = Poly(1));

  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t slots() const noexcept { return coeffs_.size(); }

  /// Throws Error(Domain) if |w| > max_len.
  const Poly& coefficient(const Word& w) const;
  const Poly& at_index(std::uint64_t index) const { return coeffs_[index]; }
  const Poly& constant_term() const { return coeffs_[0]; }

  void set(const Word& w, Poly p);
  void set_index(std::uint64_t index, Poly p) { coeffs_[index] = std::move(p); }
  Poly& mutable_index(std::uint64_t index) { return coeffs_[index]; }

  bool is_proper() const { return coeffs_[0].is_zero(); }
  bool is_zero() const;
  std::size_t nonzero_count() const;

  /// Calls f(index, length, coefficient) for each nonzero coefficient in order.
  void for_each_nonzero(
      const std::function<void(std::uint64_t, std::size_t, const Poly&)>& f) const;

  /// Same series, forgetting words longer than new_len (new_len <= max_len).
  TruncatedSeries truncated(std::size_t new_len) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Poly& k, const TruncatedSeries& s);

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  std::size_t max_len_;
  std::vector<Poly> coeffs_;
};

// Named forms of the rational operations. All binary operations throw
// Error(Domain) when the truncation lengths differ.
TruncatedSeries nc_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries nc_scalar(const Poly& k, const TruncatedSeries& s);
/// Cauchy product truncated at max_len.
TruncatedSeries nc_mul(const TruncatedSeries& s, const TruncatedSeries& t);
/// S* = 1 + S S*; requires (S,1) = 0, otherwise Error(Domain).
TruncatedSeries nc_star(const TruncatedSeries& s);

/// a^{-1} S : coefficient of x is (S, a x). Result has max_len - 1
/// (zero series of length 0 when max_len is 0).
TruncatedSeries left_quotient(Colour a, const TruncatedSeries& s);
/// Quotient by a whole word; result has max_len - |w| (clamped at 0).
TruncatedSeries left_quotient(const Word& w, const TruncatedSeries& s);

/// 2^-kappa where kappa is the length of the shortest word on which S and T
/// differ; 0 if they agree on every word of length <= max_len.
Rational distance(const TruncatedSeries& s, const TruncatedSeries& t);

/// {"max_len": L, "terms": [{"word":"brb","poly":[...]}, ...]}
nlohmann::ordered_json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::ordered_json& j);

}  // namespace hardimer
