#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hardimer {

struct VerifyRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Oracle-equivalence suite: brute-force census vs. recursive series vs.
/// rational closed form vs. representation for every word of length
/// 1..max_len, plus derived-vs-builtin matrices, exact counts, the tree
/// bijection and subadditivity.
std::vector<VerifyRow> run_verification(std::size_t max_len);

}  // namespace hardimer
