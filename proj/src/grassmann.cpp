#include "monobar/grassmann.hpp"

#include <algorithm>
#include <string>

#include "monobar/error.hpp"
#include "monobar/subset_complex.hpp"

namespace monobar {

SetSystem word_to_system(const Word& w, const RelationSet& relations) {
  if (w.empty()) throw InputError("word_to_system needs a nonempty word");
  return SetSystem(w.size() - 1, occurrence_gap_masks(w, relations));
}

SetSystem tree_to_system(const RootedTree& tree,
                         const std::vector<std::vector<std::size_t>>& relations) {
  const auto edges = tree.internal_edges();
  std::vector<PointMask> masks;
  for (const auto& rel : relations) {
    std::vector<char> member(tree.size(), 0);
    for (std::size_t v : rel) {
      if (v >= tree.size()) throw InputError("tree relation names an unknown vertex");
      if (!tree.is_internal(v))
        throw InputError("tree relation contains leaf '" + tree.node(v).id + "'");
      member[v] = 1;
    }
    const auto size = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
    if (size < 2) throw InputError("tree relation needs at least two internal vertices");

    PointMask mask = 0;
    std::size_t inside_edges = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (member[edges[e].first] && member[edges[e].second]) {
        mask |= PointMask{1} << e;
        ++inside_edges;
      }
    }
    // a vertex set of a tree is connected iff it spans |set| - 1 edges
    if (inside_edges != size - 1) throw InputError("tree relation is not a connected subtree");
    masks.push_back(mask);
  }
  return SetSystem(edges.size(), std::move(masks));
}

GradedComplex grassmann_complex(const SetSystem& s, std::optional<PointMask> variables,
                                std::size_t max_basis) {
  std::vector<std::uint64_t> forbidden(s.relations().begin(), s.relations().end());
  if (variables) {
    // a variable outside the mask behaves as a zero generator
    for (std::size_t p : mask_points(s.ground_mask() & ~*variables))
      forbidden.push_back(PointMask{1} << (p - 1));
  }
  return subset_complex(s.ground_size(), forbidden, max_basis);
}

HomologyProfile system_homology(const SetSystem& s, const FieldSpec& field, std::size_t max_basis) {
  return homology_dims(grassmann_complex(s, std::nullopt, max_basis), field);
}

} // namespace monobar
