#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monobar {

/// Planar rooted tree of operations. Nodes with arity 0 are leaves; every
/// other node is an internal vertex (an operation). Children listed in the
/// tree may be fewer than the arity; the rest are unlabeled inputs.
class RootedTree {
public:
  struct Node {
    std::string id;
    std::size_t arity = 0;
    std::optional<std::string> parent;  // nullopt for the root
  };

  RootedTree() = default;
  /// Throws InputError unless the nodes form a single tree whose child
  /// counts respect the arities.
  explicit RootedTree(std::vector<Node> nodes);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const { return root_; }
  std::optional<std::size_t> parent(std::size_t i) const { return parent_.at(i); }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_.at(i); }
  bool is_internal(std::size_t i) const { return nodes_.at(i).arity > 0; }
  std::optional<std::size_t> find(const std::string& id) const;

  /// Edges (parent, child) joining two internal vertices, in node order of
  /// the child.
  std::vector<std::pair<std::size_t, std::size_t>> internal_edges() const;

private:
  std::vector<Node> nodes_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = 0;
};

} // namespace monobar
