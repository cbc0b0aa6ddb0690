#include "hardimer/linrep.hpp"

#include <string>

namespace hardimer {

namespace {

// Sparse description of one matrix row: (column, entry), 1-based as printed.
struct Cell {
  std::size_t col;
  Poly value;
};

PolyMatrix from_rows(std::size_t dim, const std::vector<std::pair<std::size_t, std::vector<Cell>>>& rows) {
  PolyMatrix m(dim);
  for (const auto& [row, cells] : rows) {
    for (const auto& cell : cells) m(row - 1, cell.col - 1) = cell.value;
  }
  return m;
}

}  // namespace

LinRep::LinRep(std::vector<Poly> lambda, PolyMatrix mat_b, PolyMatrix mat_r, std::vector<Poly> gamma)
    : lambda_(std::move(lambda)), mat_b_(std::move(mat_b)), mat_r_(std::move(mat_r)), gamma_(std::move(gamma)) {
  const std::size_t d = lambda_.size();
  if (d == 0 || gamma_.size() != d || mat_b_.dim() != d || mat_r_.dim() != d) {
    fail(ErrorKind::Input, "LinRep: inconsistent dimensions (lambda " + std::to_string(d) + ", gamma " +
                               std::to_string(gamma_.size()) + ", mu(b) " + std::to_string(mat_b_.dim()) +
                               ", mu(r) " + std::to_string(mat_r_.dim()) + ")");
  }
  index_nonzeros();
}

void LinRep::index_nonzeros() {
  sparse_b_.clear();
  sparse_r_.clear();
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!mat_b_(i, j).is_zero()) sparse_b_.emplace_back(i, j);
      if (!mat_r_(i, j).is_zero()) sparse_r_.emplace_back(i, j);
    }
  }
}

std::vector<Poly> LinRep::step(const std::vector<Poly>& v, Colour c) const {
  std::vector<Poly> out(dim());
  const PolyMatrix& m = mat(c);
  for (const auto& [row, col] : (c == Colour::Blue ? sparse_b_ : sparse_r_)) {
    if (!v[row].is_zero()) out[col] += v[row] * m(row, col);
  }
  return out;
}

std::vector<Poly> LinRep::row_after(const Word& w) const {
  std::vector<Poly> v = lambda_;
  for (Colour c : w.letters()) v = step(v, c);
  return v;
}

Poly LinRep::coefficient(const Word& w) const {
  if (w.empty()) fail(ErrorKind::Domain, "coefficient: the empty word is outside the representation's domain");
  const auto v = row_after(w);
  Poly acc;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!gamma_[i].is_zero() && !v[i].is_zero()) acc += v[i] * gamma_[i];
  }
  return acc;
}

LinRep LinRep::substitute(Var from, Var to) const {
  auto sub_vec = [&](const std::vector<Poly>& v) {
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.substitute(from, to));
    return out;
  };
  auto sub_mat = [&](const PolyMatrix& m) {
    PolyMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).substitute(from, to);
    return out;
  };
  return LinRep(sub_vec(lambda_), sub_mat(mat_b_), sub_mat(mat_r_), sub_vec(gamma_));
}

bool LinRep::operator==(const LinRep& o) const {
  return lambda_ == o.lambda_ && gamma_ == o.gamma_ && mat_b_ == o.mat_b_ && mat_r_ == o.mat_r_;
}

LinRep builtin_rep_sb() {
  const Poly one(1), b3 = Poly::b3(), r3 = Poly::r3(), y = Poly::y();
  const Poly b3y = b3 * y, r3y = r3 * y;

  const PolyMatrix B1 = from_rows(19, {
      {1, {{1, one}, {5, b3}, {15, b3y}}},
      {2, {{1, one}, {2, y}, {5, b3}, {15, b3y}}},
      {4, {{4, y}}},
      {5, {{1, one}}},
      {6, {{2, one}}},
      {7, {{4, one}}},
      {12, {{1, one}, {5, b3}, {15, b3y}}},
      {13, {{1, one}}},
      {16, {{3, one}}},
      {17, {{14, one}}},
      {18, {{15, one}}},
      {19, {{5, one}}},
  });
  const PolyMatrix R1 = from_rows(19, {
      {1, {{1, one}, {3, r3}, {7, r3y}}},
      {2, {{1, one}, {3, r3}, {7, r3y}}},
      {3, {{1, one}}},
      {4, {{1, one}}},
      {8, {{5, one}}},
      {9, {{6, one}}},
      {10, {{7, one}}},
      {11, {{3, one}}},
      {12, {{1, one}, {3, r3}, {7, r3y}, {12, y}}},
      {13, {{13, y}}},
      {14, {{12, one}}},
      {15, {{13, one}}},
  });

  std::vector<Poly> lambda(19), gamma(19);
  lambda[0] = one;
  lambda[2] = -one;
  lambda[9] = -r3y;
  lambda[10] = -r3;
  gamma[0] = gamma[1] = gamma[11] = one;
  return LinRep(std::move(lambda), B1, R1, std::move(gamma));
}

LinRep colour_swapped(const LinRep& rep) {
  // mu'(b) = mu(r) with r3 -> b3, mu'(r) = mu(b) with b3 -> r3.
  const LinRep to_b = rep.substitute(Var::R3, Var::B3);
  const LinRep to_r = rep.substitute(Var::B3, Var::R3);
  return LinRep(to_b.lambda(), to_b.mat(Colour::Red), to_r.mat(Colour::Blue), rep.gamma());
}

LinRep builtin_rep_sr() { return colour_swapped(builtin_rep_sb()); }

LinRep block_diagonal(const LinRep& a, const LinRep& b) {
  const std::size_t da = a.dim(), d = a.dim() + b.dim();
  std::vector<Poly> lambda(a.lambda()), gamma(a.gamma());
  lambda.insert(lambda.end(), b.lambda().begin(), b.lambda().end());
  gamma.insert(gamma.end(), b.gamma().begin(), b.gamma().end());
  auto block = [&](Colour c) {
    PolyMatrix m(d);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.mat(c)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(da + i, da + j) = b.mat(c)(i, j);
    return m;
  };
  return LinRep(std::move(lambda), block(Colour::Blue), block(Colour::Red), std::move(gamma));
}

LinRep builtin_rep_sum() { return block_diagonal(builtin_rep_sb(), builtin_rep_sr()); }

const LinRep& builtin_rep(RepKind kind) {
  static const LinRep sb = builtin_rep_sb();
  static const LinRep sr = builtin_rep_sr();
  static const LinRep sum = builtin_rep_sum();
  switch (kind) {
    case RepKind::Sb: return sb;
    case RepKind::Sr: return sr;
    case RepKind::Sum: return sum;
  }
  return sum;
}

std::vector<RepDiscrepancy> compare_reps(const LinRep& expected, const LinRep& found) {
  std::vector<RepDiscrepancy> out;
  if (expected.dim() != found.dim()) {
    out.push_back({"dim", expected.dim(), found.dim(), Poly(), Poly()});
    return out;
  }
  const std::size_t d = expected.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (!(expected.lambda()[i] == found.lambda()[i]))
      out.push_back({"lambda", i + 1, 0, expected.lambda()[i], found.lambda()[i]});
  }
  for (Colour c : {Colour::Blue, Colour::Red}) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!(expected.mat(c)(i, j) == found.mat(c)(i, j)))
          out.push_back({c == Colour::Blue ? "mu(b)" : "mu(r)", i + 1, j + 1, expected.mat(c)(i, j),
                         found.mat(c)(i, j)});
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(expected.gamma()[i] == found.gamma()[i]))
      out.push_back({"gamma", i + 1, 0, expected.gamma()[i], found.gamma()[i]});
  }
  return out;
}

nlohmann::ordered_json to_json(const LinRep& rep) {
  auto vec = [](const std::vector<Poly>& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& p : v) a.push_back(to_json(p));
    return a;
  };
  auto mat = [](const PolyMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return {{"dim", rep.dim()},
          {"lambda", vec(rep.lambda())},
          {"mu_b", mat(rep.mat(Colour::Blue))},
          {"mu_r", mat(rep.mat(Colour::Red))},
          {"gamma", vec(rep.gamma())}};
}

nlohmann::ordered_json to_json(const std::vector<RepDiscrepancy>& diffs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& d : diffs) {
    out.push_back({{"what", d.what},
                   {"row", d.row},
                   {"col", d.col},
                   {"expected", d.expected.to_string()},
                   {"found", d.found.to_string()}});
  }
  return out;
}

}  // namespace hardimer
