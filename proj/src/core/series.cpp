#include "hardimer/series.hpp"

#include <string>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

constexpr std::uint64_t first_index(std::size_t len) { return (std::uint64_t{1} << len) - 1; }

void require_same_length(const TruncatedSeries& s, const TruncatedSeries& t, const char* op) {
  if (s.max_len() != t.max_len()) {
    fail(ErrorKind::Domain, std::string(op) + ": truncation lengths differ (" + std::to_string(s.max_len()) +
                                " vs " + std::to_string(t.max_len()) + ")");
  }
}

struct Entry {
  std::uint64_t bits;
  std::size_t len;
  const Poly* coeff;
};

std::vector<Entry> nonzeros(const TruncatedSeries& s) {
  std::vector<Entry> out;
  for (std::size_t len = 0; len <= s.max_len(); ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const Poly& p = s.at_index(first_index(len) + bits);
      if (!p.is_zero()) out.push_back({bits, len, &p});
    }
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t max_len) : max_len_(max_len) {
  if (max_len > kMaxSeriesLength) {
    fail(ErrorKind::Resource, "series truncation " + std::to_string(max_len) + " exceeds the bound " +
                                  std::to_string(kMaxSeriesLength));
  }
  coeffs_.resize(first_index(max_len + 1));
}

TruncatedSeries TruncatedSeries::one(std::size_t max_len) { return constant(max_len, Poly(1)); }

TruncatedSeries TruncatedSeries::constant(std::size_t max_len, const Poly& k) {
  TruncatedSeries s(max_len);
  s.coeffs_[0] = k;
  return s;
}

TruncatedSeries TruncatedSeries::letter(std::size_t max_len, Colour c) {
  return monomial(max_len, Word({c}));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t max_len, const Word& w, const Poly& k) {
  TruncatedSeries s(max_len);
  if (w.size() <= max_len) s.coeffs_[word_index(w)] = k;
  return s;
}

const Poly& TruncatedSeries::coefficient(const Word& w) const {
  if (w.size() > max_len_) {
    fail(ErrorKind::Domain, "word of length " + std::to_string(w.size()) + " beyond truncation " +
                                std::to_string(max_len_));
  }
  return coeffs_[word_index(w)];
}

void TruncatedSeries::set(const Word& w, Poly p) {
  if (w.size() > max_len_) fail(ErrorKind::Domain, "set: word beyond truncation");
  coeffs_[word_index(w)] = std::move(p);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& p : coeffs_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::size_t TruncatedSeries::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& p : coeffs_) n += !p.is_zero();
  return n;
}

void TruncatedSeries::for_each_nonzero(
    const std::function<void(std::uint64_t, std::size_t, const Poly&)>& f) const {
  for (std::size_t len = 0; len <= max_len_; ++len) {
    for (std::uint64_t i = first_index(len); i < first_index(len + 1); ++i) {
      if (!coeffs_[i].is_zero()) f(i, len, coeffs_[i]);
    }
  }
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_len) const {
  if (new_len > max_len_) fail(ErrorKind::Domain, "truncated: cannot extend a truncation");
  TruncatedSeries s(new_len);
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(s.coeffs_.size()), s.coeffs_.begin());
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_length(*this, o, "nc_add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_length(*this, o, "nc_sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_length(a, b, "nc_mul");
  const std::size_t L = a.max_len();
  TruncatedSeries out(L);
  const auto left = nonzeros(a);
  const auto right = nonzeros(b);
  for (const auto& x : left) {
    for (const auto& z : right) {
      const std::size_t len = x.len + z.len;
      if (len > L) break;  // right is sorted by length
      const std::uint64_t bits = (x.bits << z.len) | z.bits;
      out.coeffs_[first_index(len) + bits].add_product(*x.coeff, *z.coeff);
    }
  }
  return out;
}

TruncatedSeries operator*(const Poly& k, const TruncatedSeries& s) {
  TruncatedSeries out(s.max_len());
  if (k.is_zero()) return out;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    if (!s.coeffs_[i].is_zero()) out.coeffs_[i] = k * s.coeffs_[i];
  }
  return out;
}

TruncatedSeries nc_add(const TruncatedSeries& s, const TruncatedSeries& t) { return s + t; }
TruncatedSeries nc_scalar(const Poly& k, const TruncatedSeries& s) { return k * s; }
TruncatedSeries nc_mul(const TruncatedSeries& s, const TruncatedSeries& t) { return s * t; }

TruncatedSeries nc_star(const TruncatedSeries& s) {
  if (!s.is_proper()) fail(ErrorKind::Domain, "star is only defined for proper series (zero constant term)");
  // Fixpoint T = 1 + S T. Since S is proper, the length-n part of S T only
  // involves parts of T of length < n, so after pass n every word of length
  // <= n is final and each pass only has to fill in the new length.
  const std::size_t L = s.max_len();
  TruncatedSeries t = TruncatedSeries::one(L);
  const auto sn = nonzeros(s);
  for (std::size_t len = 1; len <= L; ++len) {
    for (const auto& x : sn) {
      if (x.len > len) break;
      const std::size_t rest = len - x.len;
      for (std::uint64_t zb = 0; zb < (std::uint64_t{1} << rest); ++zb) {
        const Poly& tz = t.at_index(first_index(rest) + zb);
        if (tz.is_zero()) continue;
        t.mutable_index(first_index(len) + ((x.bits << rest) | zb)).add_product(*x.coeff, tz);
      }
    }
  }
  return t;
}

TruncatedSeries left_quotient(Colour a, const TruncatedSeries& s) {
  return left_quotient(Word({a}), s);
}

TruncatedSeries left_quotient(const Word& w, const TruncatedSeries& s) {
  const std::size_t L = s.max_len() >= w.size() ? s.max_len() - w.size() : 0;
  TruncatedSeries out(L);
  if (s.max_len() < w.size()) return out;
  const std::uint64_t wb = word_bits(w);
  for (std::size_t len = 0; len <= L; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const std::uint64_t src = first_index(len + w.size()) + ((wb << len) | bits);
      out.set_index(first_index(len) + bits, s.at_index(src));
    }
  }
  return out;
}

Rational distance(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_same_length(s, t, "distance");
  for (std::size_t len = 0; len <= s.max_len(); ++len) {
    for (std::uint64_t i = first_index(len); i < first_index(len + 1); ++i) {
      if (!(s.at_index(i) == t.at_index(i))) {
        Rational d(1);
        mpq_div_2exp(d.get_mpq_t(), d.get_mpq_t(), static_cast<mp_bitcnt_t>(len));
        return d;
      }
    }
  }
  return Rational(0);
}

nlohmann::ordered_json to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  s.for_each_nonzero([&](std::uint64_t index, std::size_t, const Poly& p) {
    terms.push_back({{"word", word_from_index(index).str()}, {"poly", to_json(p)}});
  });
  return {{"max_len", s.max_len()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const nlohmann::ordered_json& j) {
  try {
    TruncatedSeries s(j.at("max_len").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      s.set(Word::parse(t.at("word").get<std::string>()), poly_from_json(t.at("poly")));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace hardimer
