#include "hardimer/tree.hpp"

#include <string>

#include "hardimer/error.hpp"

namespace hardimer {

namespace {

NodeKind vertex_kind(Colour c) { return c == Colour::Blue ? NodeKind::Blue : NodeKind::Red; }

bool is_vertex(NodeKind k) { return k == NodeKind::Blue || k == NodeKind::Red; }

Colour vertex_colour(NodeKind k) { return k == NodeKind::Blue ? Colour::Blue : Colour::Red; }

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Root: return "root";
    case NodeKind::Blue: return "b";
    case NodeKind::Red: return "r";
    case NodeKind::Bud: return "bud";
    case NodeKind::Leaf: return "leaf";
  }
  return "?";
}

[[noreturn]] void malformed(const std::string& why) { fail(ErrorKind::Input, "malformed tree: " + why); }

nlohmann::ordered_json dump(const HcdTree& t, const std::vector<int>& charges, std::size_t i) {
  nlohmann::ordered_json children = nlohmann::ordered_json::array();
  for (std::size_t c : t.node(i).children) children.push_back(dump(t, charges, c));
  return {{"kind", kind_name(t.node(i).kind)}, {"charge", charges[i]}, {"children", std::move(children)}};
}

}  // namespace

std::size_t HcdTree::add(NodeKind kind) {
  nodes_.push_back(Node{kind, {}});
  return nodes_.size() - 1;
}

void HcdTree::attach(std::size_t parent, std::size_t child) { nodes_.at(parent).children.push_back(child); }

std::size_t HcdTree::count(NodeKind kind) const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.kind == kind;
  return n;
}

std::vector<int> HcdTree::subtree_charges() const {
  if (nodes_.empty() || nodes_[0].kind != NodeKind::Root) malformed("node 0 must be the root mark");
  // Preorder with a visited check, then accumulate in reverse preorder.
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(nodes_.size(), nodes_.size());
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    order.push_back(i);
    for (std::size_t c : nodes_[i].children) {
      if (c >= nodes_.size()) malformed("child index out of range");
      if (seen[c]) malformed("node " + std::to_string(c) + " reachable twice");
      seen[c] = true;
      parent[c] = i;
      stack.push_back(c);
    }
  }
  if (order.size() != nodes_.size()) malformed("unreachable nodes present");
  std::vector<int> charge(nodes_.size(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    if (nodes_[i].kind == NodeKind::Bud) charge[i] -= 1;
    if (nodes_[i].kind == NodeKind::Leaf) charge[i] += 1;
    if (i != 0) charge[parent[i]] += charge[i];
  }
  return charge;
}

bool HcdTree::charges_valid() const {
  const auto charge = subtree_charges();
  if (charge[0] != 0) return false;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == NodeKind::Bud) continue;
    if (charge[i] != 0 && charge[i] != 1) return false;
  }
  return true;
}

HcdTree to_tree(const Configuration& config) {
  if (!is_valid(config)) fail(ErrorKind::Input, "to_tree: configuration is not valid");
  const Word& w = config.word;
  const std::size_t n = w.size();
  // partner[p] = right end if p is a left end; 0 otherwise.
  std::vector<std::uint32_t> right_of(n + 2, 0), left_of(n + 2, 0);
  for (const auto& d : config.dimers) {
    right_of[d.left] = d.right;
    left_of[d.right] = d.left;
  }

  HcdTree t;
  std::size_t attach_to = 0;
  std::uint32_t p = 1;
  while (p <= n) {
    const std::size_t v = t.add(vertex_kind(w[p - 1]));
    t.attach(attach_to, v);
    if (right_of[p] == 0) {
      attach_to = v;
      ++p;
      continue;
    }
    const std::uint32_t r = right_of[p];
    t.attach(v, t.add(NodeKind::Bud));
    const std::size_t rv = t.add(vertex_kind(w[r - 1]));
    t.attach(v, rv);
    // Inner vertices hang below the right end, nearest first, ending in a leaf.
    std::size_t chain = rv;
    for (std::uint32_t q = r - 1; q > p; --q) {
      const std::size_t iv = t.add(vertex_kind(w[q - 1]));
      t.attach(chain, iv);
      chain = iv;
    }
    t.attach(chain, t.add(NodeKind::Leaf));
    attach_to = rv;
    p = r + 1;
  }
  return t;
}

Configuration from_tree(const HcdTree& tree) {
  if (!tree.charges_valid()) malformed("charge invariants violated (unmatched buds or leaves)");
  const auto& nodes = tree.nodes();
  const auto& root = nodes[0];
  if (root.children.size() > 1) malformed("root mark must have at most one child");

  std::vector<Colour> letters;
  std::vector<Dimer> dimers;
  if (root.children.empty()) return Configuration{};

  std::size_t cur = root.children[0];
  while (true) {
    const auto& node = nodes[cur];
    if (!is_vertex(node.kind)) malformed("expected a coloured vertex on the main line");
    const Colour colour = vertex_colour(node.kind);
    letters.push_back(colour);
    const auto left = static_cast<std::uint32_t>(letters.size());

    const bool opens = !node.children.empty() && nodes[node.children[0]].kind == NodeKind::Bud;
    if (!opens) {
      if (node.children.empty()) break;
      if (node.children.size() != 1) malformed("plain vertex with more than one child");
      cur = node.children[0];
      continue;
    }

    if (node.children.size() != 2) malformed("dimer start must have exactly a bud and a partner");
    if (!nodes[node.children[0]].children.empty()) malformed("bud with children");
    const std::size_t rv = node.children[1];
    const auto& rnode = nodes[rv];
    if (!is_vertex(rnode.kind)) malformed("dimer partner must be a coloured vertex");
    if (vertex_colour(rnode.kind) != colour) malformed("dimer ends have different colours");
    if (rnode.children.empty() || rnode.children.size() > 2) malformed("dimer end must carry a leaf chain");

    std::vector<Colour> inner;  // nearest to the right end first
    std::size_t chain = rnode.children[0];
    while (nodes[chain].kind != NodeKind::Leaf) {
      if (!is_vertex(nodes[chain].kind)) malformed("leaf chain interrupted by a non-vertex");
      if (nodes[chain].children.size() != 1) malformed("inner vertex must have exactly one child");
      const Colour ic = vertex_colour(nodes[chain].kind);
      if (ic == colour) malformed("inner vertex shares the dimer colour (dimer ends not nearest)");
      inner.push_back(ic);
      chain = nodes[chain].children[0];
    }
    if (!nodes[chain].children.empty()) malformed("leaf with children");

    letters.insert(letters.end(), inner.rbegin(), inner.rend());
    letters.push_back(colour);
    dimers.push_back({colour, left, static_cast<std::uint32_t>(letters.size())});

    if (rnode.children.size() == 1) break;
    cur = rnode.children[1];
  }

  Configuration config{Word(std::move(letters)), std::move(dimers)};
  if (!is_valid(config)) malformed("recovered configuration is not valid");
  return config;
}

nlohmann::ordered_json to_json(const HcdTree& tree) {
  return dump(tree, tree.subtree_charges(), 0);
}

}  // namespace hardimer
