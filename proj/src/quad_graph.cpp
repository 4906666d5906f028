#include "monobar/quad_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "monobar/error.hpp"
#include "monobar/grassmann.hpp"
#include "monobar/subset_complex.hpp"

namespace monobar {

RelationGraph::RelationGraph(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adjacency_(n, 0) {
  if (n > kMaxGround) throw CapacityError("graph with " + std::to_string(n) + " vertices is too large");
  for (auto [u, v] : edges) {
    if (u == 0 || v == 0 || u > n || v > n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adjacency_[u - 1] |= PointMask{1} << (v - 1);
    adjacency_[v - 1] |= PointMask{1} << (u - 1);
  }
}

std::size_t RelationGraph::edge_count() const {
  std::size_t twice = 0;
  for (PointMask m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> RelationGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 1; u <= vertex_count(); ++u)
    for (std::size_t v : mask_points(adjacency_[u - 1]))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t RelationGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::popcount(neighbors(v)));
}

RelationGraph RelationGraph::induced(PointMask keep) const {
  std::vector<std::size_t> label(vertex_count() + 1, 0);
  std::size_t next = 0;
  for (std::size_t v = 1; v <= vertex_count(); ++v)
    if (keep >> (v - 1) & 1) label[v] = ++next;
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  for (auto [u, v] : edges())
    if (label[u] && label[v]) kept.emplace_back(label[u], label[v]);
  return RelationGraph(next, kept);
}

std::vector<PointMask> RelationGraph::components() const {
  std::vector<PointMask> out;
  PointMask seen = 0;
  for (std::size_t start = 1; start <= vertex_count(); ++start) {
    const PointMask bit = PointMask{1} << (start - 1);
    if (seen & bit) continue;
    PointMask comp = bit, frontier = bit;
    while (frontier) {
      PointMask next = 0;
      for (std::size_t v : mask_points(frontier)) next |= adjacency_[v - 1];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

SetSystem RelationGraph::to_system() const {
  std::vector<PointMask> relations;
  for (auto [u, v] : edges()) relations.push_back((PointMask{1} << (u - 1)) | (PointMask{1} << (v - 1)));
  return SetSystem(vertex_count(), std::move(relations));
}

RelationGraph graph_from_system(const SetSystem& s) {
  PointMask zero_vars = 0;
  for (PointMask r : s.relations()) {
    const int size = std::popcount(r);
    if (size >= 3) throw InputError("relation " + format_mask(r) + " is not quadratic");
    if (size == 1) zero_vars |= r;
  }
  std::vector<std::size_t> label(s.ground_size() + 1, 0);
  std::size_t next = 0;
  for (std::size_t p = 1; p <= s.ground_size(); ++p)
    if (!(zero_vars >> (p - 1) & 1)) label[p] = ++next;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (PointMask r : s.relations()) {
    if (std::popcount(r) != 2) continue;
    const auto pts = mask_points(r);
    edges.emplace_back(label[pts[0]], label[pts[1]]);
  }
  return RelationGraph(next, edges);
}

HomologyProfile kunneth_product(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.dims.empty() || b.dims.empty()) return HomologyProfile::from_dims({});
  std::vector<std::size_t> dims(a.dims.size() + b.dims.size() - 1, 0);
  for (std::size_t i = 0; i < a.dims.size(); ++i)
    for (std::size_t j = 0; j < b.dims.size(); ++j) dims[i + j] += a.dims[i] * b.dims[j];
  return trimmed(HomologyProfile::from_dims(std::move(dims)));
}

HomologyProfile trimmed(HomologyProfile p) {
  while (!p.dims.empty() && p.dims.back() == 0) p.dims.pop_back();
  return p;
}

HomologyProfile components_homology(const RelationGraph& g, const FieldSpec& field,
                                    std::size_t max_basis) {
  HomologyProfile product = HomologyProfile::from_dims({1});
  for (PointMask comp : g.components())
    product = kunneth_product(product, reduce_homology(g.induced(comp), field, max_basis).first);
  return product;
}

std::optional<CliqueVertex> find_clique_vertex(const RelationGraph& g) {
  std::optional<CliqueVertex> best;
  for (std::size_t x = 1; x <= g.vertex_count(); ++x) {
    const PointMask nbrs = g.neighbors(x);
    if (!nbrs) continue;
    if (best && g.degree(x) >= best->neighbors.size()) continue;
    bool clique = true;
    for (std::size_t a : mask_points(nbrs)) {
      const PointMask others = nbrs & ~(PointMask{1} << (a - 1));
      if ((g.neighbors(a) & others) != others) {
        clique = false;
        break;
      }
    }
    if (clique) best = CliqueVertex{x, mask_points(nbrs)};
  }
  return best;
}

std::vector<RelationGraph> eliminate(const RelationGraph& g, std::size_t x) {
  if (x == 0 || x > g.vertex_count()) throw InputError("vertex " + std::to_string(x) + " out of range");
  const PointMask nbrs = g.neighbors(x);
  if (!nbrs) throw InputError("vertex " + std::to_string(x) + " has no neighbors");
  for (std::size_t a : mask_points(nbrs)) {
    const PointMask others = nbrs & ~(PointMask{1} << (a - 1));
    if ((g.neighbors(a) & others) != others)
      throw InputError("neighbors of vertex " + std::to_string(x) + " are not pairwise adjacent");
  }
  const PointMask all = g.vertex_count() == 0 ? 0 : (~PointMask{0} >> (64 - g.vertex_count()));
  std::vector<RelationGraph> out;
  for (std::size_t a : mask_points(nbrs)) {
    const PointMask removed = g.neighbors(a) | (PointMask{1} << (a - 1));
    out.push_back(g.induced(all & ~removed));
  }
  return out;
}

std::pair<HomologyProfile, ReductionTrace> reduce_homology(const RelationGraph& g,
                                                           const FieldSpec& field,
                                                           std::size_t max_basis) {
  ReductionTrace trace;
  trace.graph = g;

  auto finish = [&](HomologyProfile p) {
    trace.profile = trimmed(std::move(p));
    return std::make_pair(trace.profile, trace);
  };

  if (g.vertex_count() == 0) {
    trace.rule = ReductionTrace::Rule::Empty;
    return finish(HomologyProfile::from_dims({1}));
  }
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      trace.rule = ReductionTrace::Rule::IsolatedVertex;
      trace.vertex = v;
      return finish(HomologyProfile::from_dims({}));
    }
  }

  const auto comps = g.components();
  if (comps.size() > 1) {
    trace.rule = ReductionTrace::Rule::Components;
    HomologyProfile product = HomologyProfile::from_dims({1});
    for (PointMask comp : comps) {
      auto [p, child] = reduce_homology(g.induced(comp), field, max_basis);
      product = kunneth_product(product, p);
      trace.children.push_back(std::move(child));
    }
    return finish(product);
  }

  if (auto cv = find_clique_vertex(g)) {
    trace.rule = ReductionTrace::Rule::CliqueElimination;
    trace.vertex = cv->vertex;
    trace.neighbors = cv->neighbors;
    std::vector<std::size_t> dims;
    for (const auto& sub : eliminate(g, cv->vertex)) {
      auto [p, child] = reduce_homology(sub, field, max_basis);
      if (dims.size() < p.dims.size() + 1) dims.resize(p.dims.size() + 1, 0);
      for (std::size_t d = 0; d < p.dims.size(); ++d) dims[d + 1] += p.dims[d];
      trace.children.push_back(std::move(child));
    }
    return finish(HomologyProfile::from_dims(std::move(dims)));
  }

  trace.rule = ReductionTrace::Rule::Oracle;
  return finish(system_homology(g.to_system(), field, max_basis));
}

namespace {

std::string rule_name(ReductionTrace::Rule rule) {
  switch (rule) {
    case ReductionTrace::Rule::Empty: return "empty";
    case ReductionTrace::Rule::IsolatedVertex: return "isolated";
    case ReductionTrace::Rule::Components: return "components";
    case ReductionTrace::Rule::CliqueElimination: return "clique";
    case ReductionTrace::Rule::Oracle: return "oracle";
  }
  return "?";
}

} // namespace

void render_trace(std::ostream& out, const ReductionTrace& trace, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << rule_name(trace.rule)
      << " vertices=" << trace.graph.vertex_count() << " edges=" << trace.graph.edge_count();
  if (trace.rule == ReductionTrace::Rule::IsolatedVertex) out << " vertex=" << trace.vertex;
  if (trace.rule == ReductionTrace::Rule::CliqueElimination) {
    out << " vertex=" << trace.vertex << " neighbors=";
    for (std::size_t i = 0; i < trace.neighbors.size(); ++i)
      out << (i ? "," : "") << trace.neighbors[i];
  }
  out << " total=" << trace.profile.total << " dims=";
  if (trace.profile.dims.empty()) out << "0";
  for (std::size_t i = 0; i < trace.profile.dims.size(); ++i)
    out << (i ? "," : "") << trace.profile.dims[i];
  out << '\n';
  for (const auto& child : trace.children) render_trace(out, child, indent + 1);
}

SetSystem binary_tree_family(std::size_t n, TreeFamily family) {
  if (n == 0) throw InputError("tree family depth must be at least 1");
  if (n > 6) throw CapacityError("tree family depth " + std::to_string(n) + " exceeds 6");
  // heap numbering: internal vertex v has children 2v, 2v+1; the edge into
  // child v is variable v-1
  const std::size_t vertices = (std::size_t{1} << n) - 1;
  const std::size_t ground = vertices - 1;
  auto edge = [](std::size_t child) { return PointMask{1} << (child - 2); };

  std::vector<PointMask> relations;
  for (std::size_t v = 1; v <= vertices; ++v) {
    const std::size_t left = 2 * v, right = 2 * v + 1;
    if (right > vertices) continue;
    relations.push_back(edge(left) | edge(right));
    if (family == TreeFamily::CherriesOnly || v == 1) continue;
    relations.push_back(edge(v) | edge(left));
    relations.push_back(edge(v) | edge(right));
  }
  if (family == TreeFamily::DeepSingletons)
    for (std::size_t v = std::size_t{1} << (n - 1); v <= vertices; ++v)
      if (v >= 2) relations.push_back(edge(v));
  return SetSystem(ground, std::move(relations));
}

} // namespace monobar
