#include "hardimer/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Sorts by monomial, merges equal monomials, drops zeros.
void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Monomial m = terms[i].first;
    Rational c = terms[i].second;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == m; ++j) c += terms[j].second;
    if (c != 0) terms[out++] = {m, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

template <class Op>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Op op) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Rational(0), b[j].second));
      ++j;
    } else {
      Rational c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
T power(const T& base, std::uint32_t e) {
  T result(1);
  T b = base;
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> Rational { fail(ErrorKind::Input, "cannot parse '" + s + "' as a rational number"); };
  if (s.empty()) return bad();

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return bad();
    BigInt d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::Input, "zero denominator in '" + s + "'");
    value = Rational(BigInt(std::string(num), 10), d);
    value.canonicalize();
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view ex = body.substr(e + 1);
      bool neg_ex = false;
      if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
        neg_ex = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) return bad();
      exponent = std::stol(std::string(ex)) * (neg_ex ? -1 : 1);
    }
    std::string digits;
    auto dot = mantissa.find('.');
    if (dot == std::string_view::npos) {
      if (!all_digits(mantissa)) return bad();
      digits = std::string(mantissa);
    } else {
      auto ip = mantissa.substr(0, dot), fp = mantissa.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
        return bad();
      }
      digits = std::string(ip) + std::string(fp);
      exponent -= static_cast<long>(fp.size());
    }
    BigInt num(digits, 10);
    if (exponent >= 0) {
      value = Rational(num * pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Rational(num, pow10(static_cast<unsigned long>(-exponent)));
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
}

Poly::Poly(Rational c) {
  if (c != 0) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly::Poly(Monomial m, Rational c) {
  if (c != 0) terms_.emplace_back(m, std::move(c));
}

Poly Poly::var(Var v, std::uint32_t power) {
  Monomial m;
  switch (v) {
    case Var::B3: m.i = power; break;
    case Var::R3: m.j = power; break;
    case Var::Y: m.k = power; break;
  }
  return Poly(m, Rational(1));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, [](const Rational& a, const Rational& b) { return Rational(a + b); });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& a, const Rational& b) { return Rational(a - b); });
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Monomial shifts preserve order.
    Poly p;
    p.terms_ = std::move(terms);
    return p;
  }
  return Poly::from_terms(std::move(terms));
}

void Poly::add_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::substitute(Var from, Var to) const {
  if (from == to) return *this;
  auto get = [](Monomial& m, Var v) -> std::uint32_t& {
    return v == Var::B3 ? m.i : (v == Var::R3 ? m.j : m.k);
  };
  std::vector<Term> terms = terms_;
  for (auto& [m, c] : terms) {
    get(m, to) += get(m, from);
    get(m, from) = 0;
  }
  return from_terms(std::move(terms));
}

Poly Poly::swap_colours() const {
  std::vector<Term> terms = terms_;
  for (auto& [m, c] : terms) std::swap(m.i, m.j);
  return from_terms(std::move(terms));
}

Rational Poly::eval(const EvalPoint<Rational>& at) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * power(at.u, m.i) * power(at.v, m.j) * power(at.w, m.k);
  return acc;
}

double Poly::eval(const EvalPoint<double>& at) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c.get_d() * power(at.u, m.i) * power(at.v, m.j) * power(at.w, m.k);
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    auto add = [&](const char* name, std::uint32_t e) {
      if (e == 1) factors.emplace_back(name);
      else if (e > 1) factors.push_back(std::string(name) + "^" + std::to_string(e));
    };
    add("b3", m.i);
    add("r3", m.j);
    add("y", m.k);
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

nlohmann::ordered_json to_json(const Poly& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"i", m.i}, {"j", m.j}, {"k", m.k}, {"c", c.get_str()}});
  }
  return out;
}

Poly poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) fail(ErrorKind::Input, "poly JSON must be an array of terms");
  std::vector<Poly::Term> terms;
  try {
    for (const auto& t : j) {
      Monomial m{t.at("i").get<std::uint32_t>(), t.at("j").get<std::uint32_t>(), t.at("k").get<std::uint32_t>()};
      terms.emplace_back(m, parse_rational(t.at("c").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed poly JSON: ") + e.what());
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace hardimer
