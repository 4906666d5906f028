#include "monobar/rooted_tree.hpp"

#include <map>

#include "monobar/error.hpp"

namespace monobar {

RootedTree::RootedTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InputError("tree has no nodes");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!index.emplace(nodes_[i].id, i).second)
      throw InputError("tree node '" + nodes_[i].id + "' declared twice");

  parent_.assign(nodes_.size(), std::nullopt);
  children_.assign(nodes_.size(), {});
  std::size_t roots = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].parent) {
      root_ = i;
      ++roots;
      continue;
    }
    auto it = index.find(*nodes_[i].parent);
    if (it == index.end())
      throw InputError("tree node '" + nodes_[i].id + "' has unknown parent '" +
                       *nodes_[i].parent + "'");
    parent_[i] = it->second;
    children_[it->second].push_back(i);
  }
  if (roots != 1) throw InputError("tree must have exactly one root, found " + std::to_string(roots));

  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (children_[i].size() > nodes_[i].arity)
      throw InputError("tree node '" + nodes_[i].id + "' has more children than its arity");

  // every node must reach the root without revisiting a node
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::size_t cur = i, steps = 0;
    while (parent_[cur]) {
      cur = *parent_[cur];
      if (++steps > nodes_.size()) throw InputError("tree contains a cycle");
    }
  }
}

std::optional<std::size_t> RootedTree::find(const std::string& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> RootedTree::internal_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (parent_[i] && is_internal(i) && is_internal(*parent_[i])) out.emplace_back(*parent_[i], i);
  return out;
}

} // namespace monobar
