#pragma once

#include <optional>
#include <vector>

#include "monobar/field.hpp"
#include "monobar/graded_complex.hpp"
#include "monobar/monomial_algebra.hpp"
#include "monobar/rooted_tree.hpp"
#include "monobar/set_system.hpp"

namespace monobar {

/// Gap system of a word: ground = gaps 1..n-1, one relation per relation
/// occurrence covering the gaps inside it.
SetSystem word_to_system(const Word& w, const RelationSet& relations);

/// Ground = internal edges of the tree (numbered in RootedTree::internal_edges
/// order); each relation, a set of internal vertices inducing a connected
/// subtree with at least two vertices, becomes its set of internal edges.
/// Throws InputError on a malformed relation.
SetSystem tree_to_system(const RootedTree& tree,
                         const std::vector<std::vector<std::size_t>>& relations);

/// Monomial Grassmann quotient with differential u -> u (x_1 + ... + x_n).
/// With a mask, only the variables inside it are used.
GradedComplex grassmann_complex(const SetSystem& s, std::optional<PointMask> variables = std::nullopt,
                                std::size_t max_basis = kDefaultMaxBasis);

HomologyProfile system_homology(const SetSystem& s, const FieldSpec& field,
                                std::size_t max_basis = kDefaultMaxBasis);

} // namespace monobar
