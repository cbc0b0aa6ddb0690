#include "hardimer/chdc.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

void check_length(const Word& word) {
  if (word.size() > kMaxBruteForceLength) {
    fail(ErrorKind::Resource, "brute-force enumeration is limited to words of length " +
                                  std::to_string(kMaxBruteForceLength) + " (got " +
                                  std::to_string(word.size()) + ")");
  }
}

// Depth-first search over candidates sorted by left index. A taken dimer
// forces the next taken one to start strictly after its right end, which is
// exactly span disjointness for a left-sorted chain.
template <class Visit>
void search(const std::vector<Dimer>& cands, std::size_t idx, std::uint32_t min_left,
            std::vector<Dimer>& taken, Visit& visit) {
  if (idx == cands.size()) {
    visit(taken);
    return;
  }
  search(cands, idx + 1, min_left, taken, visit);
  const Dimer& d = cands[idx];
  if (d.left >= min_left) {
    taken.push_back(d);
    search(cands, idx + 1, d.right + 1, taken, visit);
    taken.pop_back();
  }
}

template <class Visit>
void for_each_config(const Word& word, Visit&& visit) {
  check_length(word);
  const auto cands = candidate_dimers(word);
  std::vector<Dimer> taken;
  search(cands, 0, 1, taken, visit);
}

}  // namespace

std::vector<Dimer> candidate_dimers(const Word& word) {
  std::vector<Dimer> out;
  std::uint32_t last[2] = {0, 0};
  for (std::size_t p = 0; p < word.size(); ++p) {
    const auto c = static_cast<std::size_t>(word[p]);
    const auto pos = static_cast<std::uint32_t>(p + 1);
    if (last[c] != 0) out.push_back({word[p], last[c], pos});
    last[c] = pos;
  }
  std::sort(out.begin(), out.end(), [](const Dimer& a, const Dimer& b) { return a.left < b.left; });
  return out;
}

bool is_valid(const Configuration& config) {
  const Word& w = config.word;
  for (const auto& d : config.dimers) {
    if (d.left < 1 || d.right < 1 || d.left > w.size() || d.right > w.size()) {
      fail(ErrorKind::Input, "dimer (" + std::to_string(d.left) + "," + std::to_string(d.right) +
                                 ") lies outside a word of length " + std::to_string(w.size()));
    }
  }
  for (const auto& d : config.dimers) {
    if (d.left >= d.right) return false;
    if (w[d.left - 1] != d.colour || w[d.right - 1] != d.colour) return false;
    for (std::uint32_t p = d.left + 1; p < d.right; ++p) {
      if (w[p - 1] == d.colour) return false;
    }
  }
  std::vector<Dimer> sorted = config.dimers;
  std::sort(sorted.begin(), sorted.end(), [](const Dimer& a, const Dimer& b) { return a.left < b.left; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].left <= sorted[i - 1].right) return false;
  }
  return true;
}

std::vector<Configuration> enumerate_configs(const Word& word) {
  std::vector<Configuration> out;
  for_each_config(word, [&](const std::vector<Dimer>& taken) {
    Configuration c{word, taken};
    std::sort(c.dimers.begin(), c.dimers.end(), [](const Dimer& a, const Dimer& b) { return a.left < b.left; });
    out.push_back(std::move(c));
  });
  return out;
}

TypeTriple config_type(const Configuration& config) {
  if (!is_valid(config)) fail(ErrorKind::Input, "config_type: configuration is not valid");
  TypeTriple t;
  for (const auto& d : config.dimers) {
    (d.colour == Colour::Blue ? t.i : t.j) += 1;
    t.k += d.inner_vertices();
  }
  return t;
}

Poly census(const Word& word) {
  std::map<Monomial, std::uint64_t> counts;
  for_each_config(word, [&](const std::vector<Dimer>& taken) {
    Monomial m;
    for (const auto& d : taken) {
      (d.colour == Colour::Blue ? m.i : m.j) += 1;
      m.k += d.inner_vertices();
    }
    ++counts[m];
  });
  std::vector<Poly::Term> terms;
  terms.reserve(counts.size());
  for (const auto& [m, n] : counts) {
    BigInt big;
    mpz_import(big.get_mpz_t(), 1, -1, sizeof n, 0, 0, &n);
    terms.emplace_back(m, Rational(big));
  }
  return Poly::from_terms(std::move(terms));
}

std::uint64_t count_configs(const Word& word) {
  std::uint64_t n = 0;
  for_each_config(word, [&](const std::vector<Dimer>&) { ++n; });
  return n;
}

nlohmann::ordered_json to_json(const Dimer& d) {
  return {{"colour", std::string(1, to_char(d.colour))}, {"left", d.left}, {"right", d.right}};
}

nlohmann::ordered_json to_json(const Configuration& config) {
  nlohmann::ordered_json dimers = nlohmann::ordered_json::array();
  for (const auto& d : config.dimers) dimers.push_back(to_json(d));
  return {{"word", config.word.str()}, {"dimers", std::move(dimers)}};
}

nlohmann::ordered_json census_to_json(const Poly& census) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [m, c] : census.terms()) {
    if (c.get_den() != 1 || c < 0) fail(ErrorKind::Input, "census coefficients must be nonnegative integers");
    out.push_back({{"i", m.i}, {"j", m.j}, {"k", m.k}, {"m", c.get_num().get_ui()}});
  }
  return out;
}

Configuration config_from_json(const nlohmann::ordered_json& j) {
  try {
    Configuration c;
    c.word = Word::parse(j.at("word").get<std::string>());
    for (const auto& d : j.at("dimers")) {
      const auto colour = d.at("colour").get<std::string>();
      if (colour != "b" && colour != "r") fail(ErrorKind::Input, "dimer colour must be \"b\" or \"r\"");
      c.dimers.push_back({colour == "b" ? Colour::Blue : Colour::Red, d.at("left").get<std::uint32_t>(),
                          d.at("right").get<std::uint32_t>()});
    }
    std::sort(c.dimers.begin(), c.dimers.end(), [](const Dimer& a, const Dimer& b) { return a.left < b.left; });
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed configuration JSON: ") + e.what());
  }
}

}  // namespace hardimer
