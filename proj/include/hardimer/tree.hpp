#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hardimer/chdc.hpp"

namespace hardimer {

enum class NodeKind : std::uint8_t { Root, Blue, Red, Bud, Leaf };

/// Rooted ordered tree obtained by cutting one chain edge per dimer.
///
/// Node 0 is the root mark. Layout of the children lists:
///   - root: the first vertex (none for the empty word);
///   - left dimer end l: {bud, right end r};
///   - right dimer end r: {chain, continuation?} where the chain runs through
///     the inner vertices r-1, ..., l+1 and terminates in a leaf;
///   - inner vertex: {next chain element or leaf};
///   - any other vertex: {continuation?}.
/// Buds carry charge -1, leaves +1, everything else 0.
class HcdTree {
 public:
  struct Node {
    NodeKind kind = NodeKind::Root;
    std::vector<std::size_t> children;
  };

  HcdTree() : nodes_{Node{}} {}
  explicit HcdTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::size_t add(NodeKind kind);
  void attach(std::size_t parent, std::size_t child);

  std::size_t count(NodeKind kind) const;

  /// Charge of every node's subtree, indexed like nodes().
  /// Throws Error(Input) if the node graph is not a tree rooted at 0.
  std::vector<int> subtree_charges() const;

  /// Total charge 0 and every non-bud subtree of charge 0 or 1.
  bool charges_valid() const;

 private:
  std::vector<Node> nodes_;
};

/// Throws Error(Input) for an invalid configuration.
HcdTree to_tree(const Configuration& config);

/// Inverse of to_tree. Throws Error(Input) on a malformed tree: wrong child
/// layout, unmatched buds or leaves, charge violations, or a recovered dimer
/// that breaks the nearest-same-colour rule.
Configuration from_tree(const HcdTree& tree);

/// Nested {"kind":..,"charge":..,"children":[..]} dump.
nlohmann::ordered_json to_json(const HcdTree& tree);

}  // namespace hardimer
