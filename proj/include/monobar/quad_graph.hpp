#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "monobar/field.hpp"
#include "monobar/graded_complex.hpp"
#include "monobar/set_system.hpp"

namespace monobar {

/// Simple undirected graph on vertices 1..n (n <= 63) whose edges are the
/// two-element relations of a quadratic set system.
class RelationGraph {
public:
  RelationGraph() = default;
  /// Throws InputError on a loop or an endpoint outside 1..n; repeated
  /// edges collapse.
  RelationGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  PointMask neighbors(std::size_t v) const { return adjacency_.at(v - 1); }
  std::size_t degree(std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const { return neighbors(u) >> (v - 1) & 1; }

  /// Subgraph on the kept vertices, renumbered in increasing order.
  RelationGraph induced(PointMask keep) const;
  /// Vertex masks of the connected components, by smallest vertex.
  std::vector<PointMask> components() const;
  SetSystem to_system() const;

  friend bool operator==(const RelationGraph&, const RelationGraph&) = default;

private:
  std::vector<PointMask> adjacency_;
};

/// Singleton relations are removed first together with their variable (a
/// zero generator contributes nothing). Throws InputError if a relation has
/// three or more points.
RelationGraph graph_from_system(const SetSystem& s);

/// Graded product of two profiles (Kunneth).
HomologyProfile kunneth_product(const HomologyProfile& a, const HomologyProfile& b);
/// Drops trailing zero degrees.
HomologyProfile trimmed(HomologyProfile p);

struct ReductionTrace {
  enum class Rule { Empty, IsolatedVertex, Components, CliqueElimination, Oracle };

  Rule rule = Rule::Empty;
  RelationGraph graph;
  HomologyProfile profile;
  std::size_t vertex = 0;             // clique elimination only
  std::vector<std::size_t> neighbors; // clique elimination only
  std::vector<ReductionTrace> children;
};

/// Splits into components, reduces each, multiplies the graded profiles.
HomologyProfile components_homology(const RelationGraph& g, const FieldSpec& field,
                                    std::size_t max_basis = kDefaultMaxBasis);

struct CliqueVertex {
  std::size_t vertex;
  std::vector<std::size_t> neighbors;

  friend bool operator==(const CliqueVertex&, const CliqueVertex&) = default;
};

/// A vertex of degree >= 1 whose neighbors are pairwise adjacent; minimal
/// degree first, then smallest index.
std::optional<CliqueVertex> find_clique_vertex(const RelationGraph& g);

/// For each neighbor a_i of x, the graph with a_i and all of its neighbors
/// removed. H_d(g) is the sum of H_{d-1} over the returned graphs. Throws
/// InputError unless the neighborhood of x is a nonempty clique.
std::vector<RelationGraph> eliminate(const RelationGraph& g, std::size_t x);

/// Isolated vertex => zero; several components => Kunneth; clique vertex
/// => elimination; otherwise the Grassmann oracle. Profiles are trimmed.
std::pair<HomologyProfile, ReductionTrace> reduce_homology(const RelationGraph& g,
                                                           const FieldSpec& field,
                                                           std::size_t max_basis = kDefaultMaxBasis);

void render_trace(std::ostream& out, const ReductionTrace& trace, int indent = 0);

enum class TreeFamily { LineGraph, CherriesOnly, DeepSingletons };

/// Full binary tree with internal vertices at depths 0..n-1; ground = its
/// 2^n - 2 internal edges, numbered by child in heap order. LineGraph: all
/// adjacent edge pairs. CherriesOnly: sibling pairs. DeepSingletons:
/// LineGraph plus every edge into the deepest internal level as a
/// singleton. Throws InputError for n = 0, CapacityError for n > 6.
SetSystem binary_tree_family(std::size_t n, TreeFamily family);

} // namespace monobar
