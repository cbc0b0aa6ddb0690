#include "hardimer/derive.hpp"

#include <map>
#include <string>

#include "hardimer/error.hpp"
#include "hardimer/series.hpp"
#include "hardimer/solve.hpp"

namespace hardimer {

namespace {

using Elem = std::map<FactorProduct, Poly>;  // K-linear combination of factor products

constexpr Factor letter(Colour c) { return {Factor::Kind::Letter, c}; }
constexpr Factor star(Colour c) { return {Factor::Kind::Star, c}; }
constexpr Colour B = Colour::Blue;
constexpr Colour R = Colour::Red;

void add(Elem& e, const FactorProduct& p, const Poly& k) {
  if (k.is_zero()) return;
  Poly& slot = e[p];
  slot += k;
  if (slot.is_zero()) e.erase(p);
}

void add(Elem& e, const Elem& other, const Poly& k = Poly(1)) {
  for (const auto& [p, c] : other) add(e, p, k * c);
}

bool constant_term(const FactorProduct& p) {
  for (const auto& f : p) {
    if (f.kind == Factor::Kind::Letter) return false;
  }
  return true;
}

// a^{-1}(F_1 F_2 ... F_m) by the product rule, with a^{-1}c = [c = a] and
// a^{-1}(y c)* = [c = a] y (y c)*.
Elem quotient(Colour a, const FactorProduct& p) {
  Elem out;
  if (p.empty()) return out;
  const Factor& head = p.front();
  const FactorProduct rest(p.begin() + 1, p.end());
  if (head.colour == a) {
    if (head.kind == Factor::Kind::Letter) add(out, rest, Poly(1));
    else add(out, p, Poly::y());
  }
  if (head.kind == Factor::Kind::Star) add(out, quotient(a, rest));
  return out;
}

Elem quotient(Colour a, const Elem& e) {
  Elem out;
  for (const auto& [p, k] : e) add(out, quotient(a, p), k);
  return out;
}

// A_c = c + c3 c^2 + c3 y c o (1 - y o)^{-1} c, o the other colour.
Elem symbolic_A(Colour c) {
  const Colour o = swap(c);
  const Poly c3 = c == B ? Poly::b3() : Poly::r3();
  Elem e;
  add(e, FactorProduct{letter(c)}, Poly(1));
  add(e, FactorProduct{letter(c), letter(c)}, c3);
  add(e, FactorProduct{letter(c), letter(o), star(o), letter(c)}, c3 * Poly::y());
  return e;
}

TruncatedSeries series_of(const FactorProduct& p, std::size_t L) {
  auto s = TruncatedSeries::one(L);
  for (const auto& f : p) {
    const auto l = TruncatedSeries::letter(L, f.colour);
    s = s * (f.kind == Factor::Kind::Letter ? l : nc_star(nc_scalar(Poly::y(), l)));
  }
  return s;
}

TruncatedSeries series_of(const Elem& e, std::size_t L) {
  TruncatedSeries s(L);
  for (const auto& [p, k] : e) s += nc_scalar(k, series_of(p, L));
  return s;
}

}  // namespace

std::vector<FactorProduct> stable_generators() {
  return {
      {},                                            // S1  = 1
      {star(B)},                                     // S2  = (1-yb)^-1
      {letter(R)},                                   // S3  = r
      {star(B), letter(R)},                          // S4  = S2 r
      {letter(B)},                                   // S5  = b
      {letter(B), star(B)},                          // S6  = b S2
      {letter(B), star(B), letter(R)},               // S7  = b S2 r
      {letter(R), letter(B)},                        // S8  = r b
      {letter(R), letter(B), star(B)},               // S9  = r b S2
      {letter(R), letter(B), star(B), letter(R)},    // S10 = r b S2 r
      {letter(R), letter(R)},                        // S11 = r^2
      {star(R)},                                     // S12 = (1-yr)^-1
      {star(R), letter(B)},                          // S13 = S12 b
      {letter(R), star(R)},                          // S14 = r S12
      {letter(R), star(R), letter(B)},               // S15 = r S12 b
      {letter(B), letter(R)},                        // S16 = b r
      {letter(B), letter(R), star(R)},               // S17 = b r S12
      {letter(B), letter(R), star(R), letter(B)},    // S18 = b r S12 b
      {letter(B), letter(B)},                        // S19 = b^2
  };
}

std::string describe(const FactorProduct& product) {
  if (product.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < product.size(); ++i) {
    if (i) s += "*";
    const char c = to_char(product[i].colour);
    s += product[i].kind == Factor::Kind::Letter ? std::string(1, c) : std::string("(1-y") + c + ")^-1";
  }
  return s;
}

DerivedBasisRep derive_basis_rep(std::size_t working_len) {
  if (working_len < 2) fail(ErrorKind::Domain, "derive_basis_rep needs a working length >= 2");
  const auto gens = stable_generators();
  const std::size_t n = gens.size() + 1;  // T_1 = 1 plus T_{k+1} = S_k P*
  std::map<FactorProduct, std::size_t> position;
  for (std::size_t k = 0; k < gens.size(); ++k) position[gens[k]] = k + 1;

  DerivedBasisRep out;
  out.mat_b = PolyMatrix(n);
  out.mat_r = PolyMatrix(n);
  out.lambda.assign(n, Poly());
  out.gamma.assign(n, Poly());
  out.names.push_back("T1 = 1");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out.names.push_back("T" + std::to_string(k + 2) + " = " + describe(gens[k]) + "*P*");
  }

  Elem p = symbolic_A(R);
  add(p, symbolic_A(B));
  for (const auto& [prod, k] : p) {
    if (constant_term(prod)) fail(ErrorKind::Internal, "P = A_r + A_b is not proper");
  }

  auto locate = [&](const FactorProduct& prod, std::size_t row, Colour a) {
    auto it = position.find(prod);
    if (it == position.end()) {
      fail(ErrorKind::Internal, std::string(1, to_char(a)) + "^{-1}" + out.names[row] + " produces " +
                                    describe(prod) + "*P*, which is not among the basis elements");
    }
    return it->second;
  };

  // a^{-1}(S_k P*) = (a^{-1}S_k) P* + (S_k,1) (a^{-1}P) P*
  for (Colour a : {B, R}) {
    const Elem qp = quotient(a, p);
    PolyMatrix& m = a == B ? out.mat_b : out.mat_r;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem q = quotient(a, gens[k]);
      if (constant_term(gens[k])) add(q, qp);
      for (const auto& [prod, coef] : q) m(k + 1, locate(prod, k + 1, a)) += coef;
    }
  }

  // S_b = (1 - A_r) P* - 1
  Elem one_minus_ar;
  add(one_minus_ar, FactorProduct{}, Poly(1));
  add(one_minus_ar, symbolic_A(R), Poly(-1));
  out.lambda[0] = Poly(-1);
  for (const auto& [prod, coef] : one_minus_ar) {
    auto it = position.find(prod);
    if (it == position.end()) fail(ErrorKind::Internal, "1 - A_r leaves the span of the generators");
    out.lambda[it->second] += coef;
  }

  // Check everything against truncated series.
  const std::size_t L = working_len;
  const auto p_star = nc_star(series_of(p, L));
  std::vector<TruncatedSeries> t;
  t.push_back(TruncatedSeries::one(L));
  for (const auto& g : gens) t.push_back(series_of(g, L) * p_star);
  for (std::size_t i = 0; i < n; ++i) out.gamma[i] = t[i].constant_term();

  for (Colour a : {B, R}) {
    const PolyMatrix& m = a == B ? out.mat_b : out.mat_r;
    for (std::size_t i = 0; i < n; ++i) {
      TruncatedSeries rhs(L - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(i, j).is_zero()) rhs += nc_scalar(m(i, j), t[j].truncated(L - 1));
      }
      if (!(left_quotient(a, t[i]) == rhs)) {
        fail(ErrorKind::Internal, std::string("basis not stable at truncation ") + std::to_string(L) + ": " +
                                      to_char(a) + "^{-1}" + out.names[i] + " disagrees with its matrix row");
      }
    }
  }
  TruncatedSeries sb(L);
  for (std::size_t i = 0; i < n; ++i) sb += nc_scalar(out.lambda[i], t[i]);
  if (!(sb == solve_rational(L).s_b)) {
    fail(ErrorKind::Internal, "sum lambda_i T_i does not reproduce S_b at truncation " + std::to_string(L));
  }
  return out;
}

LinRep derive_rep(std::size_t working_len) {
  const DerivedBasisRep full = derive_basis_rep(working_len);
  const std::size_t n = full.lambda.size();
  for (const PolyMatrix* m : {&full.mat_b, &full.mat_r}) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*m)(0, i).is_zero() || !(*m)(i, 0).is_zero()) {
        fail(ErrorKind::Internal, "first row/column of the 20x20 quotient matrices is not zero");
      }
    }
  }
  const std::size_t d = n - 1;
  PolyMatrix b(d), r(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      b(i, j) = full.mat_b(i + 1, j + 1);
      r(i, j) = full.mat_r(i + 1, j + 1);
    }
  }
  return LinRep(std::vector<Poly>(full.lambda.begin() + 1, full.lambda.end()), std::move(b), std::move(r),
                std::vector<Poly>(full.gamma.begin() + 1, full.gamma.end()));
}

}  // namespace hardimer
