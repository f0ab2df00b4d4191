#pragma once

// Randomized winding properties shared by the unit suite and the acceptance run.

#include <queue>
#include <random>

#include "cplanar/generator.hpp"
#include "support.hpp"

namespace props {

using namespace cplanar;

struct Tally {
  long checks = 0;
  long failures = 0;
};

inline CGraph instance(std::uint64_t seed) {
  GenOptions o;
  o.c = 3 + static_cast<int>(seed % 5);
  o.n = o.c + static_cast<int>(seed % 37);
  o.seed = seed;
  return generate(o);
}

/// Shortest dart path from a to b.
inline std::vector<DartId> path_between(const CombMap& m, VertexId a, VertexId b) {
  std::vector<DartId> via(m.vertex_slots(), -1);
  std::vector<char> seen(m.vertex_slots(), 0);
  std::queue<VertexId> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (DartId d : m.rotation(v))
      if (!seen[m.head(d)]) {
        seen[m.head(d)] = 1;
        via[m.head(d)] = d;
        q.push(m.head(d));
      }
  }
  std::vector<DartId> out;
  for (VertexId v = b; v != a; v = m.tail(via[v])) out.push_back(via[v]);
  return {out.rbegin(), out.rend()};
}

/// Random walk of `len` darts from v, closed by a shortest path back to v.
inline std::vector<DartId> closed_walk(const CombMap& m, VertexId v, int len, std::mt19937_64& rng) {
  std::vector<DartId> w;
  VertexId at = v;
  for (int i = 0; i < len; ++i) {
    const auto rot = m.rotation(at);
    const DartId d = rot[bounded(rng, rot.size())];
    w.push_back(d);
    at = m.head(d);
  }
  for (DartId d : path_between(m, at, v)) w.push_back(d);
  return w;
}

/// Face heights sum to zero per instance and agree with the reference step.
inline Tally face_sums(long want) {
  Tally t;
  for (std::uint64_t seed = 0; t.checks < want; ++seed) {
    const CGraph cg = instance(seed);
    const FaceTable f = trace_faces(cg.map);
    const std::vector<long> h = face_heights(cg, f);
    long sum = 0;
    for (FaceId x : f.live_faces()) {
      sum += h[x];
      t.failures += h[x] != fixtures::ref_height(cg, f.walk(x).darts);
    }
    t.failures += sum != 0;
    ++t.checks;
  }
  return t;
}

/// Closed walks have height divisible by c, equal to c times the winding number.
inline Tally closed_walks(long want, std::uint64_t seed0 = 11) {
  std::mt19937_64 rng(seed0);
  Tally t;
  for (std::uint64_t seed = 0; t.checks < want; ++seed) {
    const CGraph cg = instance(seed);
    for (int k = 0; k < 20; ++k, ++t.checks) {
      const VertexId v = static_cast<VertexId>(bounded(rng, cg.map.vertex_slots()));
      const auto w = closed_walk(cg.map, v, 1 + static_cast<int>(bounded(rng, 30)), rng);
      if (w.empty()) continue;
      const long h = height_of_walk(cg, w);
      t.failures += h % cg.c != 0;
      t.failures += h != fixtures::ref_height(cg, w);
      t.failures += winding_number(cg, w) * cg.c != h;
    }
  }
  return t;
}

/// Height of a concatenation is the sum of the parts, for closed and open pieces.
inline Tally additivity(long want, std::uint64_t seed0 = 12) {
  std::mt19937_64 rng(seed0);
  Tally t;
  for (std::uint64_t seed = 0; t.checks < want; ++seed) {
    const CGraph cg = instance(seed);
    for (int k = 0; k < 20; ++k, ++t.checks) {
      const VertexId v = static_cast<VertexId>(bounded(rng, cg.map.vertex_slots()));
      const auto a = closed_walk(cg.map, v, 1 + static_cast<int>(bounded(rng, 20)), rng);
      const auto b = closed_walk(cg.map, v, 1 + static_cast<int>(bounded(rng, 20)), rng);
      std::vector<DartId> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      t.failures += height_of_walk(cg, ab) != height_of_walk(cg, a) + height_of_walk(cg, b);
      long head = 0, rest = 0;
      const std::size_t cut = bounded(rng, ab.size() + 1);
      for (std::size_t i = 0; i < ab.size(); ++i) (i < cut ? head : rest) += dart_step(cg, ab[i]);
      t.failures += head + rest != height_of_walk(cg, ab);
    }
  }
  return t;
}

/// Contracting an intra-cluster edge keeps the height of every face, matched by surviving darts.
inline Tally contraction(long want, std::uint64_t seed0 = 13) {
  std::mt19937_64 rng(seed0);
  Tally t;
  for (std::uint64_t seed = 0; t.checks < want; ++seed) {
    CGraph cg = instance(seed);
    for (int k = 0; k < 8; ++k) {
      std::vector<EdgeId> intra;
      for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) {
        if (!cg.map.edge_alive(e)) continue;
        const Edge& x = cg.map.endpoints(e);
        if (x.u != x.v && cg.gamma[x.u] == cg.gamma[x.v]) intra.push_back(e);
      }
      if (intra.empty()) break;
      const EdgeId e = intra[bounded(rng, intra.size())];
      const FaceTable before = trace_faces(cg.map);
      const std::vector<long> hb = face_heights(cg, before);
      contract_edge(cg.map, e);
      const FaceTable after = trace_faces(cg.map);
      const std::vector<long> ha = face_heights(cg, after);
      t.failures += before.live_faces().size() != after.live_faces().size();
      ++t.checks;
      for (DartId d = 0; d < cg.map.dart_slots(); ++d) {
        if (edge_of(d) == e || !cg.map.edge_alive(edge_of(d))) continue;
        t.failures += hb[before.face_of(d)] != ha[after.face_of(d)];
      }
    }
  }
  return t;
}

}  // namespace props
