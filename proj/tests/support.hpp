#pragma once

// Fixtures and small independent reference computations shared by the tests.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cplanar/cmodel.hpp"

namespace fixtures {

using namespace cplanar;

/// Cycle v0 v1 ... v(n-1) with edge i = (i, i+1 mod n); every rotation is [out, in].
inline CGraph cycle(const std::vector<int>& labels, int c) {
  const int n = static_cast<int>(labels.size());
  std::vector<Edge> edges;
  std::vector<std::vector<DartId>> rot(n);
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    rot[i] = {2 * i, 2 * ((i + n - 1) % n) + 1};
  }
  CGraph cg;
  cg.c = c;
  cg.gamma = labels;
  cg.map = CombMap::build(n, std::move(edges), rot);
  return cg;
}

inline CGraph t3() { return cycle({0, 1, 2}, 3); }
inline CGraph double_hexagon() { return cycle({0, 1, 2, 0, 1, 2}, 3); }
inline CGraph zero_hexagon() { return cycle({0, 1, 2, 0, 2, 1}, 3); }

inline CGraph make(int c, std::vector<int> gamma, std::vector<Edge> edges, const std::vector<std::vector<DartId>>& rot) {
  CGraph cg;
  cg.c = c;
  const int n = static_cast<int>(gamma.size());
  cg.gamma = std::move(gamma);
  cg.map = CombMap::build(n, std::move(edges), rot);
  return cg;
}

/// Face count of a rotation system, traced from scratch with the convention
/// next(d) = predecessor of twin(d) in the rotation at its tail.
inline int count_faces(int dart_count, const std::vector<std::vector<DartId>>& rot) {
  std::vector<DartId> prev(dart_count, -1);
  for (const auto& r : rot)
    for (std::size_t i = 0; i < r.size(); ++i) prev[r[i]] = r[(i + r.size() - 1) % r.size()];
  std::vector<char> seen(dart_count, 0);
  int faces = 0;
  for (DartId d = 0; d < dart_count; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (DartId x = d; !seen[x]; x = prev[x ^ 1]) seen[x] = 1;
  }
  return faces;
}

/// Step of the cyclic label relation computed from first principles: +1 when b follows a,
/// -1 when a follows b, 0 when equal.
inline int ref_step(int c, int a, int b) {
  if (a == b) return 0;
  if ((a + 1) % c == b) return 1;
  if ((b + 1) % c == a) return -1;
  return 99;
}

inline long ref_height(const CGraph& cg, const std::vector<DartId>& walk) {
  long h = 0;
  for (DartId d : walk) h += ref_step(cg.c, cg.gamma[cg.map.tail(d)], cg.gamma[cg.map.head(d)]);
  return h;
}

/// Rotation of each vertex rotated to start at its smallest dart.
inline std::vector<std::vector<DartId>> canonical_rotations(const CombMap& map) {
  std::vector<std::vector<DartId>> out;
  for (VertexId v = 0; v < map.vertex_slots(); ++v) {
    std::vector<DartId> r = map.vertex_alive(v) ? map.rotation(v) : std::vector<DartId>{};
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    out.push_back(r);
  }
  return out;
}

/// Facial walk of a cycle fixture rotated to start with dart 0.
inline FacialWalk walk_from_dart0(const CGraph& cg) {
  const FaceTable f = trace_faces(cg.map);
  FacialWalk w = f.walk(f.face_of(0));
  std::rotate(w.darts.begin(), std::find(w.darts.begin(), w.darts.end(), 0), w.darts.end());
  return w;
}

inline int occurrence_of(const CombMap& m, const FacialWalk& w, VertexId v) {
  for (int k = 0; k < w.size(); ++k)
    if (m.tail(w.corner(k)) == v) return k;
  return -1;
}

/// T3 with a path from vertex `a` to vertex `b` inside the face holding dart `face_dart`.
inline CGraph t3_with_path(VertexId a, VertexId b, const std::vector<int>& labels, DartId face_dart = 0) {
  CGraph cg = fixtures::t3();
  const FaceTable f = trace_faces(cg.map);
  const FaceId face = f.face_of(face_dart);
  const FacialWalk& w = f.walk(face);
  const InsertedPath p = insert_path(cg.map, f, face, occurrence_of(cg.map, w, a), occurrence_of(cg.map, w, b),
                                     static_cast<int>(labels.size()));
  cg.gamma.resize(cg.map.vertex_slots());
  for (std::size_t i = 0; i < labels.size(); ++i) cg.gamma[p.vertices[i]] = labels[i];
  return cg;
}

/// Pendant vertex with the given label in the face holding `corner`, attached at its tail.
inline VertexId pendant(CGraph& cg, DartId corner, int label) {
  const VertexId x = cg.map.add_vertex();
  cg.gamma.resize(cg.map.vertex_slots());
  cg.gamma[x] = label;
  cg.map.add_edge(cg.map.tail(corner), corner, x, kNoDart);
  return x;
}

/// Kind of the Error thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<Errc> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Every c-labelled cycle of length n that passes validate_cyclic, one per label word.
inline std::vector<std::vector<int>> cyclic_words(int n, int c) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = ref_step(c, w[i], w[(i + 1) % n]) != 99;
    if (ok) {
      std::set<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i) {
        const int a = w[i], b = w[(i + 1) % n];
        if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
      }
      if (static_cast<int>(pairs.size()) == c) out.push_back(w);
    }
    int k = 0;
    while (k < n && ++w[k] == c) w[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace fixtures
