#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardimer/error.hpp"
#include "hardimer/poly.hpp"
#include "hardimer/word.hpp"

namespace hardimer {

/// Dense row-major square matrix of polynomials.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dim = 0) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const Poly& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Poly& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Poly> data_;
};

/// Nonzero entry of a sparse matrix.
template <class T>
struct SparseEntry {
  std::size_t row;
  std::size_t col;
  T value;
};

template <class T>
class NumericRep;

/// Linear representation (lambda, mu(b), mu(r), gamma) over K:
/// (S, x) = lambda^T mu(x_1) ... mu(x_n) gamma.
class LinRep {
 public:
  /// Throws Error(Input) on inconsistent dimensions.
  LinRep(std::vector<Poly> lambda, PolyMatrix mat_b, PolyMatrix mat_r, std::vector<Poly> gamma);

  std::size_t dim() const noexcept { return lambda_.size(); }
  const std::vector<Poly>& lambda() const noexcept { return lambda_; }
  const std::vector<Poly>& gamma() const noexcept { return gamma_; }
  const PolyMatrix& mat(Colour c) const noexcept { return c == Colour::Blue ? mat_b_ : mat_r_; }

  /// Row vector lambda^T mu(w); the empty word gives lambda itself.
  std::vector<Poly> row_after(const Word& w) const;
  /// Row vector v^T mu(c).
  std::vector<Poly> step(const std::vector<Poly>& v, Colour c) const;

  /// lambda^T mu(w) gamma, one vector-matrix product per letter.
  /// Throws Error(Domain) for the empty word.
  Poly coefficient(const Word& w) const;

  /// Every entry evaluated at (b3, r3, y) = at.
  template <class T>
  NumericRep<T> specialize(const EvalPoint<T>& at) const;

  /// Entry-wise substitution of one indeterminate by another.
  LinRep substitute(Var from, Var to) const;

  bool operator==(const LinRep& o) const;

 private:
  std::vector<Poly> lambda_;
  PolyMatrix mat_b_;
  PolyMatrix mat_r_;
  std::vector<Poly> gamma_;
  // Coordinates of nonzero entries; positions, not pointers, so copies stay valid.
  std::vector<std::pair<std::size_t, std::size_t>> sparse_b_;
  std::vector<std::pair<std::size_t, std::size_t>> sparse_r_;

  void index_nonzeros();
};

/// The 19-dimensional representation of S_b (matrices B1, R1, vectors lambda1, gamma1).
LinRep builtin_rep_sb();
/// mu2(b) = R1(r3 -> b3), mu2(r) = B1(b3 -> r3), lambda2 = lambda1(r3 -> b3), gamma2 = gamma1.
LinRep builtin_rep_sr();
/// 38-dimensional block-diagonal representation of S_b + S_r.
LinRep builtin_rep_sum();

enum class RepKind { Sb, Sr, Sum };

/// Process-wide immutable instance of a built-in representation.
const LinRep& builtin_rep(RepKind kind);

/// Colour-exchanged representation: the S_r counterpart of an S_b representation.
LinRep colour_swapped(const LinRep& rep);
LinRep block_diagonal(const LinRep& a, const LinRep& b);

/// One disagreeing entry between two representations.
struct RepDiscrepancy {
  std::string what;  // "lambda", "gamma", "mu(b)", "mu(r)" or "dim"
  std::size_t row = 0;
  std::size_t col = 0;
  Poly expected;
  Poly found;
};

std::vector<RepDiscrepancy> compare_reps(const LinRep& expected, const LinRep& found);

/// {"dim": d, "lambda": [Poly...], "mu_b": [[Poly...]...], "mu_r": ..., "gamma": [...]}
nlohmann::ordered_json to_json(const LinRep& rep);
nlohmann::ordered_json to_json(const std::vector<RepDiscrepancy>& diffs);

/// A representation with scalar entries, for fast repeated evaluation.
template <class T>
class NumericRep {
 public:
  NumericRep() = default;
  NumericRep(std::vector<T> lambda, std::vector<SparseEntry<T>> b, std::vector<SparseEntry<T>> r,
             std::vector<T> gamma)
      : lambda_(std::move(lambda)), b_(std::move(b)), r_(std::move(r)), gamma_(std::move(gamma)) {}

  std::size_t dim() const noexcept { return lambda_.size(); }
  const std::vector<T>& lambda() const noexcept { return lambda_; }
  const std::vector<T>& gamma() const noexcept { return gamma_; }
  const std::vector<SparseEntry<T>>& entries(Colour c) const noexcept {
    return c == Colour::Blue ? b_ : r_;
  }

  /// out = v^T mu(c); out is resized and overwritten.
  void step(const std::vector<T>& v, Colour c, std::vector<T>& out) const {
    out.assign(v.size(), T(0));
    for (const auto& e : entries(c)) {
      if (v[e.row] != T(0)) out[e.col] += v[e.row] * e.value;
    }
  }

  T dot_gamma(const std::vector<T>& v) const {
    T acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (gamma_[i] != T(0)) acc += v[i] * gamma_[i];
    }
    return acc;
  }

  T coefficient(const Word& w) const {
    if (w.empty()) fail(ErrorKind::Domain, "coefficient: the empty word is outside the representation's domain");
    std::vector<T> v = lambda_;
    std::vector<T> next;
    for (Colour c : w.letters()) {
      step(v, c, next);
      v.swap(next);
    }
    return dot_gamma(v);
  }

 private:
  std::vector<T> lambda_;
  std::vector<SparseEntry<T>> b_;
  std::vector<SparseEntry<T>> r_;
  std::vector<T> gamma_;
};

template <class T>
NumericRep<T> LinRep::specialize(const EvalPoint<T>& at) const {
  std::vector<T> lam, gam;
  lam.reserve(dim());
  gam.reserve(dim());
  for (const auto& p : lambda_) lam.push_back(p.eval(at));
  for (const auto& p : gamma_) gam.push_back(p.eval(at));
  auto convert = [&](const std::vector<std::pair<std::size_t, std::size_t>>& src, const PolyMatrix& m) {
    std::vector<SparseEntry<T>> out;
    for (const auto& [row, col] : src) {
      T value = m(row, col).eval(at);
      if (value != T(0)) out.push_back({row, col, value});
    }
    return out;
  };
  return NumericRep<T>(std::move(lam), convert(sparse_b_, mat_b_), convert(sparse_r_, mat_r_), std::move(gam));
}

}  // namespace hardimer
