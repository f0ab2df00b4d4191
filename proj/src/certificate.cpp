#include "cplanar/certificate.hpp"

#include <algorithm>

#include "cplanar/union_find.hpp"

namespace cplanar {

namespace {

// Rotation of v restricted to darts below limit, rotated to start at its smallest dart.
std::vector<DartId> restricted_rotation(const CombMap& map, VertexId v, DartId limit) {
  std::vector<DartId> r;
  for (DartId d : map.rotation(v))
    if (d < limit) r.push_back(d);
  if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace

VerifyReport verify_certificate(const CGraph& input, const Certificate& cert) {
  VerifyReport rep;
  auto fail = [&](std::string what) {
    rep.ok = false;
    rep.failures.push_back(std::move(what));
  };
  const CombMap& in = input.map;
  const CGraph& aug = cert.augmented;
  const int n = in.vertex_slots(), m = in.edge_slots();

  // Re-validate the map from its raw rotation lists.
  CombMap rebuilt;
  try {
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < aug.map.edge_slots(); ++e) edges.push_back(aug.map.endpoints(e));
    rebuilt = CombMap::build(aug.map.vertex_slots(), std::move(edges), aug.map.rotations());
  } catch (const Error& e) {
    fail(std::string("augmented map: ") + e.what());
    return rep;
  }
  if (aug.map.live_edge_count() != aug.map.edge_slots() || aug.map.live_vertex_count() != aug.map.vertex_slots()) {
    fail("augmented map has dead slots");
    return rep;
  }
  if (rebuilt.vertex_slots() != n) {
    fail("augmented map has " + std::to_string(rebuilt.vertex_slots()) + " vertices, input has " + std::to_string(n));
    return rep;
  }
  if (rebuilt.edge_slots() < m) {
    fail("augmented map lost input edges");
    return rep;
  }
  if (aug.c != input.c || aug.gamma != input.gamma) fail("cluster labels differ from the input");
  for (EdgeId e = 0; e < m; ++e)
    if (!(rebuilt.endpoints(e) == in.endpoints(e))) fail("edge " + std::to_string(e) + " differs from the input");
  if (!rep.ok) return rep;

  for (VertexId v = 0; v < n; ++v)
    if (restricted_rotation(rebuilt, v, 2 * m) != restricted_rotation(in, v, 2 * m))
      fail("rotation at vertex " + std::to_string(v) + " does not contain the input rotation");

  UnionFind rel(n);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = in.endpoints(e);
    if (input.gamma[ed.u] == input.gamma[ed.v]) rel.unite(ed.u, ed.v);
  }
  for (EdgeId e = m; e < rebuilt.edge_slots(); ++e) {
    const Edge& ed = rebuilt.endpoints(e);
    if (input.gamma[ed.u] != input.gamma[ed.v]) {
      fail("added edge " + std::to_string(e) + " joins clusters " + std::to_string(input.gamma[ed.u]) + " and " +
           std::to_string(input.gamma[ed.v]));
      continue;
    }
    if (!rel.unite(ed.u, ed.v)) fail("added edge " + std::to_string(e) + " closes a cycle in its cluster");
  }

  // Each cluster must be connected inside every component.
  const auto [comp, ncomp] = rebuilt.components();
  std::vector<int> root(static_cast<std::size_t>(ncomp) * std::max(aug.c, 1), -1);
  for (VertexId v = 0; v < n; ++v) {
    int& r = root[static_cast<std::size_t>(comp[v]) * aug.c + input.gamma[v]];
    if (r < 0) r = rel.find(v);
    else if (rel.find(v) != r)
      fail("cluster " + std::to_string(input.gamma[v]) + " is disconnected at vertex " + std::to_string(v));
  }

  if (static_cast<int>(cert.cluster_trees.size()) != aug.c) {
    fail("expected one tree list per cluster");
  } else {
    UnionFind tree(n);
    int tree_edges = 0;
    for (int i = 0; i < aug.c; ++i) {
      for (EdgeId e : cert.cluster_trees[i]) {
        if (e < 0 || e >= rebuilt.edge_slots()) {
          fail("tree edge " + std::to_string(e) + " does not exist");
          continue;
        }
        const Edge& ed = rebuilt.endpoints(e);
        if (input.gamma[ed.u] != i || input.gamma[ed.v] != i)
          fail("tree edge " + std::to_string(e) + " is not inside cluster " + std::to_string(i));
        else if (!tree.unite(ed.u, ed.v))
          fail("tree of cluster " + std::to_string(i) + " has a cycle");
        else
          ++tree_edges;
      }
    }
    // Spanning: one tree per (component, cluster) pair present.
    int groups = 0;
    for (int r : root) groups += r >= 0;
    if (rep.ok && tree_edges != n - groups) fail("cluster trees do not span their clusters");
  }
  return rep;
}

}  // namespace cplanar
