#include "hardimer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>

#include "hardimer/asymptotics.hpp"
#include "hardimer/chdc.hpp"
#include "hardimer/derive.hpp"
#include "hardimer/error.hpp"
#include "hardimer/linrep.hpp"
#include "hardimer/parallel.hpp"
#include "hardimer/series.hpp"
#include "hardimer/solve.hpp"
#include "hardimer/tree.hpp"

namespace hardimer {

namespace {

// Index of the first word (in length-then-lex order) for which `bad` holds.
template <class Bad>
std::optional<std::size_t> first_failure(std::size_t first, std::size_t last, Bad bad) {
  std::vector<char> flags(last - first, 0);
  parallel_for(flags.size(), [&](std::size_t i) { flags[i] = bad(first + i) ? 1 : 0; });
  auto it = std::find(flags.begin(), flags.end(), 1);
  if (it == flags.end()) return std::nullopt;
  return first + static_cast<std::size_t>(it - flags.begin());
}

VerifyRow word_row(std::string name, std::size_t first, std::size_t last, std::optional<std::size_t> bad,
                   const std::string& what) {
  if (bad) return {std::move(name), false, "mismatch at '" + word_from_index(*bad).str() + "': " + what};
  return {std::move(name), true, std::to_string(last - first) + " words"};
}

template <class F>
VerifyRow guarded(const std::string& name, F f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<VerifyRow> run_verification(std::size_t max_len) {
  if (max_len < 1 || max_len > std::min(kMaxBruteForceLength, kMaxSeriesLength)) {
    fail(ErrorKind::Input, "verify: max-len must lie in 1.." +
                               std::to_string(std::min(kMaxBruteForceLength, kMaxSeriesLength)));
  }
  const std::size_t first = 1;                            // index of "b"
  const std::size_t last = (std::size_t{2} << max_len) - 1;  // one past the longest word
  std::vector<VerifyRow> rows;

  std::vector<Poly> censuses(last);
  parallel_for(last - first, [&](std::size_t i) { censuses[first + i] = census(word_from_index(first + i)); });

  const SeriesPair rec = solve_recursive(max_len);
  const SolutionS rat = solve_rational(max_len);
  auto sum_at = [](const TruncatedSeries& a, const TruncatedSeries& b, std::size_t idx) {
    return a.at_index(idx) + b.at_index(idx);
  };

  rows.push_back(guarded("census = recursive series", [&] {
    auto bad = first_failure(first, last, [&](std::size_t i) { return censuses[i] != sum_at(rec.s_b, rec.s_r, i); });
    return word_row("census = recursive series", first, last, bad, "brute-force census differs from recursion");
  }));
  rows.push_back(guarded("recursive = rational series", [&] {
    auto bad = first_failure(first, last, [&](std::size_t i) {
      return rec.s_b.at_index(i) != rat.s_b.at_index(i) || rec.s_r.at_index(i) != rat.s_r.at_index(i);
    });
    return word_row("recursive = rational series", first, last, bad, "recursion differs from closed form");
  }));
  rows.push_back(guarded("rational series = representation", [&] {
    const LinRep& rep = builtin_rep(RepKind::Sum);
    auto bad = first_failure(first, last, [&](std::size_t i) {
      return rep.coefficient(word_from_index(i)) != sum_at(rat.s_b, rat.s_r, i);
    });
    return word_row("rational series = representation", first, last, bad, "representation differs from closed form");
  }));
  rows.push_back(guarded("derived representation = builtin", [&] {
    const auto diffs = compare_reps(builtin_rep(RepKind::Sb), derive_rep());
    if (diffs.empty()) return VerifyRow{"derived representation = builtin", true, "19x19 matrices and vectors agree"};
    const auto& d = diffs.front();
    return VerifyRow{"derived representation = builtin", false,
                     std::to_string(diffs.size()) + " discrepancies, first " + d.what + "[" +
                         std::to_string(d.row) + "," + std::to_string(d.col) + "]"};
  }));
  rows.push_back(guarded("exact count = brute force", [&] {
    auto bad = first_failure(first, last, [&](std::size_t i) {
      const Word w = word_from_index(i);
      return count_chdc(w) != BigInt(std::to_string(count_configs(w)));
    });
    return word_row("exact count = brute force", first, last, bad, "count mismatch");
  }));
  rows.push_back(guarded("tree bijection round trip", [&] {
    const std::size_t tree_len = std::min<std::size_t>(max_len, 8);
    const std::size_t tree_last = (std::size_t{2} << tree_len) - 1;
    auto bad = first_failure(0, tree_last, [&](std::size_t i) {
      for (const auto& c : enumerate_configs(word_from_index(i))) {
        const HcdTree t = to_tree(c);
        if (!t.charges_valid() || from_tree(t) != c) return true;
      }
      return false;
    });
    return word_row("tree bijection round trip", 0, tree_last, bad, "configuration not recovered");
  }));
  rows.push_back(guarded("subadditivity", [&] {
    const auto rep = subadditivity_check(1000, std::max<std::size_t>(2, max_len), 42);
    if (rep.violations.empty()) return VerifyRow{"subadditivity", true, "1000 random splits"};
    return VerifyRow{"subadditivity", false, "violated on '" + rep.violations.front().word + "'"};
  }));
  return rows;
}

}  // namespace hardimer
