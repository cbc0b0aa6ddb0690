#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hardimer/linrep.hpp"

namespace hardimer {

/// One factor of a basis product: a letter, or the star (y c)* = (1 - y c)^{-1}.
struct Factor {
  enum class Kind : std::uint8_t { Letter, Star };
  Kind kind = Kind::Letter;
  Colour colour = Colour::Blue;

  auto operator<=>(const Factor&) const = default;
  bool operator==(const Factor&) const = default;
};

using FactorProduct = std::vector<Factor>;

/// The generators S_1 .. S_19 of the stable submodule U_3, as factor products.
/// S_1 is the empty product (the series 1).
std::vector<FactorProduct> stable_generators();

/// Human-readable form such as "r*b*(1-yb)^-1".
std::string describe(const FactorProduct& product);

/// Full 20-dimensional data over T_1 = 1, T_{k+1} = S_k P*.
struct DerivedBasisRep {
  PolyMatrix mat_b{20};
  PolyMatrix mat_r{20};
  std::vector<Poly> lambda;  // S_b = sum lambda_i T_i
  std::vector<Poly> gamma;   // (T_i, 1)
  std::vector<std::string> names;
};

/// Quotient calculus on U_4: b^{-1}T_i and r^{-1}T_i are derived symbolically
/// with a^{-1}(PQ) = (a^{-1}P)Q + (P,1) a^{-1}Q and a^{-1}Q* = (a^{-1}Q)Q*,
/// matched against the generators, then checked on truncated series at
/// `working_len`. Throws Error(Internal) naming the offending T_i when a
/// quotient leaves the span or the series check fails.
DerivedBasisRep derive_basis_rep(std::size_t working_len = 8);

/// derive_basis_rep reduced to T_2 .. T_20 after checking that the first row
/// and column of both matrices vanish. Should equal builtin_rep_sb().
LinRep derive_rep(std::size_t working_len = 8);

}  // namespace hardimer
