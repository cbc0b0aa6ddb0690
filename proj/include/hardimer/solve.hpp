#pragma once

#include <cstddef>

#include "hardimer/series.hpp"

namespace hardimer {

/// A_b = b + b3 b^2 + b3 y b r (1 - y r)^{-1} b, and A_r with colours exchanged.
TruncatedSeries build_A(Colour colour, std::size_t max_len);

/// Generating series of the four tree classes.
struct SeriesPair {
  TruncatedSeries s_b, s_r, r_b, r_r;
};

/// S_b and S_r only.
struct SolutionS {
  TruncatedSeries s_b, s_r;
};

/// Level-by-level recursion over the number of coloured vertices, seeded with
/// S^1 = R^1 = the letter; each level n holds exactly the length-n terms.
/// Requires max_len >= 1.
SeriesPair solve_recursive(std::size_t max_len);

/// S_b = (1 - A_r)(A_r + A_b)* - 1 and S_r = (1 - A_b)(A_r + A_b)* - 1.
/// Requires max_len >= 1.
SolutionS solve_rational(std::size_t max_len);

}  // namespace hardimer
