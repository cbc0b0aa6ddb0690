#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace hardimer {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "7", "-3/4", "0.25", "1.5e-3" into an exact rational.
/// Throws Error(Input) on anything else (including inf/nan).
Rational parse_rational(std::string_view text);

/// Indeterminates of K = Q[b3, r3, y].
enum class Var : std::uint8_t { B3, R3, Y };

/// Exponents of b3, r3, y. Ordered lexicographically on (i, j, k).
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  Monomial operator*(const Monomial& o) const noexcept {
    return {i + o.i, j + o.j, k + o.k};
  }
  std::uint32_t degree() const noexcept { return i + j + k; }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

template <class T>
struct EvalPoint {
  T u;  // b3
  T v;  // r3
  T w;  // y
};

/// Sparse polynomial in b3, r3, y with rational coefficients.
///
/// Terms are sorted by monomial and never hold a zero coefficient, so two
/// polynomials are equal exactly when their term lists are.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): integer constants read naturally
  explicit Poly(Rational c);
  Poly(Monomial m, Rational c);

  static Poly var(Var v, std::uint32_t power = 1);
  static Poly b3() { return var(Var::B3); }
  static Poly r3() { return var(Var::R3); }
  static Poly y(std::uint32_t power = 1) { return var(Var::Y, power); }

  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// this += a * b without a temporary for the product's merge.
  void add_product(const Poly& a, const Poly& b);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Replaces every occurrence of `from` by `to` (e.g. r3 -> b3).
  Poly substitute(Var from, Var to) const;
  /// Exchanges b3 and r3.
  Poly swap_colours() const;

  Rational eval(const EvalPoint<Rational>& at) const;
  double eval(const EvalPoint<double>& at) const;

  /// "1 + r3 + b3*y^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Poly JSON: [{"i":..,"j":..,"k":..,"c":"<rational>"}] in monomial order.
nlohmann::ordered_json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::ordered_json& j);

}  // namespace hardimer
