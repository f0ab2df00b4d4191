#pragma once

// Certificate mutations on the file representation, and the load-then-verify check
// a consumer of certificate files would run.

#include <algorithm>

#include "cplanar/io.hpp"
#include "cplanar/union_find.hpp"
#include "support.hpp"

namespace mutate {

using namespace cplanar;

/// True when the certificate file loads and verifies against `input`.
inline bool accepted(const CGraph& input, const json& cert) {
  try {
    return verify_certificate(input, certificate_from_json(cert)).ok;
  } catch (const Error&) {
    return false;
  }
}

/// Removes the index-th added edge and renumbers every later edge id.
inline json delete_added_edge(json cert, std::size_t index) {
  const int e = cert["added_edges"][index]["edge"].get<int>();
  cert["edges"].erase(static_cast<std::size_t>(e));
  for (json& rot : cert["rotations"]) {
    json keep = json::array();
    for (const json& d : rot) {
      const int x = d.get<int>();
      if (x / 2 == e) continue;
      keep.push_back(x / 2 > e ? x - 2 : x);
    }
    rot = std::move(keep);
  }
  cert["added_edges"].erase(index);
  for (json& a : cert["added_edges"])
    if (a["edge"].get<int>() > e) a["edge"] = a["edge"].get<int>() - 1;
  for (json& tree : cert["cluster_trees"]) {
    json keep = json::array();
    for (const json& t : tree) {
      const int x = t.get<int>();
      if (x != e) keep.push_back(x > e ? x - 1 : x);
    }
    tree = std::move(keep);
  }
  return cert;
}

/// Swaps rotation entries pos and pos+1 (cyclically) at vertex v.
inline json transpose_rotation(json cert, int v, std::size_t pos) {
  json& rot = cert["rotations"][v];
  std::swap(rot[pos], rot[(pos + 1) % rot.size()]);
  return cert;
}


/// Independent test for a mutant that is still a valid augmentation: the rotation
/// system is spherical per component and restricts to the input rotation at every vertex.
inline bool equivalent(const CGraph& input, const json& cert) {
  const json& edges = cert["edges"];
  const int v = static_cast<int>(cert["rotations"].size());
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<DartId>> rot;
  for (const json& r : cert["rotations"]) rot.push_back(r.get<std::vector<DartId>>());
  UnionFind uf(v);
  int parts = v;
  for (const json& e : edges) parts -= uf.unite(e[0].get<int>(), e[1].get<int>());
  int faces = fixtures::count_faces(2 * m, rot);
  for (const auto& r : rot) faces += r.empty();
  if (v - m + faces != 2 * parts) return false;
  const int input_darts = 2 * input.map.edge_slots();
  for (VertexId x = 0; x < input.map.vertex_slots(); ++x) {
    std::vector<DartId> kept;
    for (DartId d : rot[x])
      if (d < input_darts) kept.push_back(d);
    const std::vector<DartId> want = input.map.rotation(x);
    if (kept.size() != want.size()) return false;
    if (kept.empty()) continue;
    const auto at = std::find(kept.begin(), kept.end(), want[0]);
    if (at == kept.end()) return false;
    std::rotate(kept.begin(), at, kept.end());
    if (kept != want) return false;
  }
  return true;
}

}  // namespace mutate
