#pragma once

#include <cstdint>
#include <random>

#include "hardimer/poly.hpp"
#include "hardimer/series.hpp"
#include "hardimer/word.hpp"

namespace hardimer::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Poly random_poly(std::mt19937_64& rng, int max_terms = 4, std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
  Poly p;
  for (int t = terms(rng); t > 0; --t) p += Poly(Monomial{ex(rng), ex(rng), ex(rng)}, random_rational(rng));
  return p;
}

inline Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::vector<Colour> letters(len);
  for (auto& c : letters) c = (rng() & 1U) ? Colour::Red : Colour::Blue;
  return Word(std::move(letters));
}

/// Sparse random series with small polynomial coefficients.
inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t max_len, double density = 0.25,
                                     bool proper = false) {
  TruncatedSeries s(max_len);
  std::bernoulli_distribution keep(density);
  for (std::uint64_t i = proper ? 1 : 0; i < s.slots(); ++i) {
    if (keep(rng)) s.set_index(i, random_poly(rng, 2, 2));
  }
  return s;
}

}  // namespace hardimer::testing
