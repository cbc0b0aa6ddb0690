#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hardimer/poly.hpp"
#include "hardimer/word.hpp"

namespace hardimer {

/// Longest word accepted by the brute-force routines (enumeration, census,
/// brute-force count). At this length a single-colour word already has
/// Fib(29) = 514229 configurations.
inline constexpr std::size_t kMaxBruteForceLength = 28;

/// An edge between two nearest vertices of the same colour. Positions are 1-based.
struct Dimer {
  Colour colour = Colour::Blue;
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  std::uint32_t inner_vertices() const noexcept { return right - left - 1; }

  auto operator<=>(const Dimer&) const = default;
  bool operator==(const Dimer&) const = default;
};

/// A coloured hard-dimer configuration: a word together with dimers whose
/// spans are pairwise disjoint sets of vertex positions. Dimers are kept
/// sorted by left endpoint.
struct Configuration {
  Word word;
  std::vector<Dimer> dimers;

  bool operator==(const Configuration&) const = default;
};

/// (blue dimers, red dimers, inner vertices)
struct TypeTriple {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  auto operator<=>(const TypeTriple&) const = default;
  bool operator==(const TypeTriple&) const = default;
};

/// Consecutive same-colour pairs, ordered by left index.
std::vector<Dimer> candidate_dimers(const Word& word);

/// True iff every dimer joins two nearest same-colour vertices and all spans
/// are disjoint (no shared endpoints, crossings or nestings).
/// Throws Error(Input) when a dimer references a position outside the word.
bool is_valid(const Configuration& config);

/// All valid configurations, the empty one first. Output order is the
/// skip-before-take depth-first order over candidate_dimers.
/// Throws Error(Resource) beyond kMaxBruteForceLength.
std::vector<Configuration> enumerate_configs(const Word& word);

/// Throws Error(Input) for an invalid configuration.
TypeTriple config_type(const Configuration& config);

/// Generating polynomial sum over configurations of b3^i r3^j y^k.
/// census of the empty word is 1 (the empty configuration on zero vertices).
Poly census(const Word& word);

/// Number of configurations, counted by the same search without materializing them.
std::uint64_t count_configs(const Word& word);

nlohmann::ordered_json to_json(const Dimer& dimer);
nlohmann::ordered_json to_json(const Configuration& config);
/// Census format: [{"i":..,"j":..,"k":..,"m":..}, ...] in monomial order.
nlohmann::ordered_json census_to_json(const Poly& census);

Configuration config_from_json(const nlohmann::ordered_json& j);

}  // namespace hardimer
