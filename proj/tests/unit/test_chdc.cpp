#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hardimer/chdc.hpp"
#include "hardimer/error.hpp"
#include "hardimer/word.hpp"

using namespace hardimer;

namespace {

Dimer blue(std::uint32_t l, std::uint32_t r) { return {Colour::Blue, l, r}; }
Dimer red(std::uint32_t l, std::uint32_t r) { return {Colour::Red, l, r}; }
Configuration config(const char* w, std::vector<Dimer> d) { return {Word::parse(w), std::move(d)}; }

const Configuration kSampleConfig = config("rbrrbrbbrbrb", {blue(2, 5), blue(7, 8), red(9, 11)});

// Direct definition: every subset of the candidates with pairwise disjoint spans.
std::set<std::vector<Dimer>> subsets_with_disjoint_spans(const Word& w) {
  const auto cand = candidate_dimers(w);
  std::set<std::vector<Dimer>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    std::vector<Dimer> pick;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1U) pick.push_back(cand[i]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < pick.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < pick.size() && ok; ++b) {
        ok = pick[a].right < pick[b].left || pick[b].right < pick[a].left;
      }
    }
    if (ok) out.insert(pick);
  }
  return out;
}

}  // namespace

TEST(Word, ParseRejectsForeignCharacters) {
  EXPECT_EQ(Word::parse("brrb").str(), "brrb");
  EXPECT_TRUE(Word::parse("").empty());
  try {
    Word::parse("brXb");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
    EXPECT_NE(std::string(e.what()).find("'X'"), std::string::npos);
  }
  EXPECT_THROW(Word::parse("B"), Error);
}

TEST(Word, IndexingIsLengthThenLex) {
  EXPECT_EQ(word_index(Word()), 0u);
  EXPECT_EQ(word_index(Word::parse("b")), 1u);
  EXPECT_EQ(word_index(Word::parse("r")), 2u);
  EXPECT_EQ(word_index(Word::parse("bb")), 3u);
  EXPECT_EQ(word_index(Word::parse("rr")), 6u);
  for (std::uint64_t i = 0; i < 2000; ++i) EXPECT_EQ(word_index(word_from_index(i)), i);
  const auto words = all_words(4);
  EXPECT_EQ(words.size(), 16u);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end(),
                             [](const Word& a, const Word& b) { return word_index(a) < word_index(b); }));
}

TEST(Word, Slicing) {
  const Word w = Word::parse("brrbr");
  EXPECT_EQ(w.prefix(2).str(), "br");
  EXPECT_EQ(w.suffix_from(2).str(), "rbr");
  EXPECT_EQ(w.swapped().str(), "rbbrb");
  EXPECT_EQ(w.prefix(2).concat(w.suffix_from(2)), w);
}

TEST(Chdc, CandidateDimers) {
  EXPECT_EQ(candidate_dimers(Word::parse("bb")), (std::vector<Dimer>{blue(1, 2)}));
  EXPECT_EQ(candidate_dimers(Word::parse("brrb")), (std::vector<Dimer>{blue(1, 4), red(2, 3)}));
  EXPECT_TRUE(candidate_dimers(Word::parse("br")).empty());
}

TEST(Chdc, Validity) {
  EXPECT_TRUE(is_valid(config("bbrr", {blue(1, 2), red(3, 4)})));
  EXPECT_FALSE(is_valid(config("brbr", {blue(1, 3), red(2, 4)})));
  EXPECT_TRUE(is_valid(config("brbrrb", {})));
  EXPECT_FALSE(is_valid(config("bbb", {blue(1, 2), blue(2, 3)})));  // shared endpoint
  EXPECT_FALSE(is_valid(config("brrb", {blue(1, 4), red(2, 3)})));  // nested
  EXPECT_FALSE(is_valid(config("bbb", {blue(1, 3)})));               // not nearest
  EXPECT_FALSE(is_valid(config("br", {blue(1, 2)})));                // wrong colour
  EXPECT_THROW(is_valid(config("bb", {blue(1, 3)})), Error);
  EXPECT_TRUE(is_valid(kSampleConfig));
}

TEST(Chdc, Enumeration) {
  EXPECT_EQ(enumerate_configs(Word::parse("br")).size(), 1u);
  const auto brrb = enumerate_configs(Word::parse("brrb"));
  ASSERT_EQ(brrb.size(), 3u);
  EXPECT_TRUE(brrb[0].dimers.empty());
  std::set<std::vector<Dimer>> got;
  for (const auto& c : brrb) got.insert(c.dimers);
  EXPECT_EQ(got, (std::set<std::vector<Dimer>>{{}, {red(2, 3)}, {blue(1, 4)}}));
  const auto bbb = enumerate_configs(Word::parse("bbb"));
  got.clear();
  for (const auto& c : bbb) got.insert(c.dimers);
  EXPECT_EQ(got, (std::set<std::vector<Dimer>>{{}, {blue(1, 2)}, {blue(2, 3)}}));
}

TEST(Chdc, EnumerationMatchesSubsetDefinition) {
  for (std::size_t len = 0; len <= 9; ++len) {
    for (const Word& w : all_words(len)) {
      std::set<std::vector<Dimer>> got;
      for (const auto& c : enumerate_configs(w)) {
        EXPECT_TRUE(is_valid(c));
        got.insert(c.dimers);
      }
      EXPECT_EQ(got, subsets_with_disjoint_spans(w)) << w.str();
      EXPECT_EQ(count_configs(w), got.size());
    }
  }
}

TEST(Chdc, ConfigType) {
  EXPECT_EQ(config_type(kSampleConfig), (TypeTriple{2, 1, 3}));
  EXPECT_EQ(config_type(config("brrb", {})), (TypeTriple{0, 0, 0}));
  EXPECT_EQ(config_type(config("brb", {blue(1, 3)})), (TypeTriple{1, 0, 1}));
  EXPECT_THROW(config_type(config("brbr", {blue(1, 3), red(2, 4)})), Error);
}

TEST(Chdc, CensusExamples) {
  const Poly b3 = Poly::b3(), r3 = Poly::r3(), y = Poly::y();
  EXPECT_EQ(census(Word::parse("bb")), 1 + b3);
  EXPECT_EQ(census(Word::parse("brrb")), 1 + r3 + b3 * Poly::y(2));
  EXPECT_EQ(census(Word()), Poly(1));
  const Poly fig = census(Word::parse("rbrrbrbbrbrb"));
  EXPECT_GE(fig.coefficient(Monomial{2, 1, 3}), 1);
}

TEST(Chdc, CensusInvariants) {
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const Word& w : all_words(len)) {
      const Poly c = census(w);
      EXPECT_EQ(c.eval(EvalPoint<Rational>{1, 1, 1}), Rational(static_cast<unsigned long>(count_configs(w))));
      EXPECT_EQ(census(w.swapped()), c.swap_colours()) << w.str();
      for (Colour a : {Colour::Blue, Colour::Red}) {
        const Word longer = w.concat(Word({a}));
        EXPECT_GE(count_configs(longer), count_configs(w));
      }
    }
  }
}

TEST(Chdc, BruteForceBound) {
  EXPECT_GE(kMaxBruteForceLength, 24u);
  EXPECT_THROW(enumerate_configs(Word(std::vector<Colour>(kMaxBruteForceLength + 1, Colour::Blue))), Error);
  // single-colour words count like Fibonacci numbers
  std::uint64_t a = 1, b = 1;
  for (std::size_t k = 1; k <= 20; ++k) {
    EXPECT_EQ(count_configs(Word(std::vector<Colour>(k, Colour::Blue))), b);
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
}

TEST(Chdc, Json) {
  const auto j = to_json(kSampleConfig);
  EXPECT_EQ(j["word"], "rbrrbrbbrbrb");
  EXPECT_EQ(j["dimers"][0].dump(), R"({"colour":"b","left":2,"right":5})");
  EXPECT_EQ(config_from_json(j), kSampleConfig);
  const auto cj = census_to_json(census(Word::parse("brrb")));
  ASSERT_EQ(cj.size(), 3u);
  EXPECT_EQ(cj[0].dump(), R"({"i":0,"j":0,"k":0,"m":1})");
  EXPECT_THROW(config_from_json(nlohmann::ordered_json::parse(R"({"word":"bx","dimers":[]})")), Error);
}
