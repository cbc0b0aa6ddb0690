#include "hardimer/solve.hpp"

#include <vector>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

Var dimer_var(Colour c) { return c == Colour::Blue ? Var::B3 : Var::R3; }

Word repeated(Colour c, std::size_t n) { return Word(std::vector<Colour>(n, c)); }

}  // namespace

TruncatedSeries build_A(Colour colour, std::size_t max_len) {
  const std::size_t L = max_len;
  const Colour other = swap(colour);
  const Poly c3 = Poly::var(dimer_var(colour));
  const auto c = TruncatedSeries::letter(L, colour);
  const auto o = TruncatedSeries::letter(L, other);
  const auto o_star = nc_star(nc_scalar(Poly::y(), o));  // (1 - y o)^{-1}
  return c + nc_scalar(c3, c * c) + nc_scalar(c3 * Poly::y(), c * o * o_star * c);
}

SeriesPair solve_recursive(std::size_t max_len) {
  if (max_len < 1) fail(ErrorKind::Domain, "solve_recursive needs max_len >= 1");
  const std::size_t L = max_len;
  const auto b = TruncatedSeries::letter(L, Colour::Blue);
  const auto r = TruncatedSeries::letter(L, Colour::Red);
  const Poly b3 = Poly::b3(), r3 = Poly::r3();

  // Index n holds the terms with exactly n coloured vertices; 0 is empty.
  std::vector<TruncatedSeries> sb(L + 1, TruncatedSeries(L)), sr = sb, rb = sb, rr = sb;
  sb[1] = rb[1] = b;
  sr[1] = rr[1] = r;

  for (std::size_t n = 2; n <= L; ++n) {
    const auto s_prev = sb[n - 1] + sr[n - 1];
    sb[n] = b * s_prev + nc_scalar(b3, b * rb[n - 1]);
    sr[n] = r * s_prev + nc_scalar(r3, r * rr[n - 1]);

    rb[n] = b * s_prev;
    rr[n] = r * s_prev;
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const auto s_k = sb[n - 1 - k] + sr[n - 1 - k];
      const Poly yk = Poly::y(static_cast<std::uint32_t>(k));
      rb[n] += TruncatedSeries::monomial(L, repeated(Colour::Red, k).concat(Word({Colour::Blue})), yk) * s_k;
      rr[n] += TruncatedSeries::monomial(L, repeated(Colour::Blue, k).concat(Word({Colour::Red})), yk) * s_k;
    }
    const Poly yn = Poly::y(static_cast<std::uint32_t>(n - 1));
    rb[n] += TruncatedSeries::monomial(L, repeated(Colour::Red, n - 1).concat(Word({Colour::Blue})), yn);
    rr[n] += TruncatedSeries::monomial(L, repeated(Colour::Blue, n - 1).concat(Word({Colour::Red})), yn);
  }

  SeriesPair out{TruncatedSeries(L), TruncatedSeries(L), TruncatedSeries(L), TruncatedSeries(L)};
  for (std::size_t n = 1; n <= L; ++n) {
    out.s_b += sb[n];
    out.s_r += sr[n];
    out.r_b += rb[n];
    out.r_r += rr[n];
  }
  return out;
}

SolutionS solve_rational(std::size_t max_len) {
  if (max_len < 1) fail(ErrorKind::Domain, "solve_rational needs max_len >= 1");
  const std::size_t L = max_len;
  const auto a_b = build_A(Colour::Blue, L);
  const auto a_r = build_A(Colour::Red, L);
  const auto one = TruncatedSeries::one(L);
  const auto p_star = nc_star(a_r + a_b);  // (1 - A_r - A_b)^{-1}
  return {(one - a_r) * p_star - one, (one - a_b) * p_star - one};
}

}  // namespace hardimer
