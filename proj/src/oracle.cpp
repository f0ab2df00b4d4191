#include "cplanar/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "cplanar/construct.hpp"
#include "cplanar/union_find.hpp"

namespace cplanar {

const char* oracle_status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::CPlanar: return "CPlanar";
    case OracleStatus::NotCPlanar: return "NotCPlanar";
    case OracleStatus::LimitExceeded: return "LimitExceeded";
  }
  return "?";
}

CGraph compact_instance(const CGraph& cg) {
  const auto compact = cg.map.compacted();
  CGraph out;
  out.c = cg.c;
  out.map = compact.map;
  out.gamma.assign(out.map.vertex_slots(), 0);
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v)
    if (compact.vertex_map[v] >= 0) out.gamma[compact.vertex_map[v]] = cg.gamma[v];
  return out;
}

Certificate witness_certificate(const CGraph& cg, const std::vector<ChordRequest>& witness) {
  Certificate cert;
  cert.augmented = cg;
  cert.input_vertex_count = cg.map.vertex_slots();
  cert.input_edge_count = cg.map.edge_slots();
  const FaceTable faces = FaceTable::trace(cg.map);
  const std::vector<EdgeId> edges = insert_chords(cert.augmented.map, faces, witness);
  const auto [comp, ncomp] = cg.map.components();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    AddedEdge a;
    a.edge = edges[i];
    a.u = cert.augmented.map.endpoints(a.edge).u;
    a.v = cert.augmented.map.endpoints(a.edge).v;
    a.cluster = cg.gamma[a.u];
    a.phase = Phase::Forest;
    a.face_at_insertion = witness[i].face;
    a.component = comp[a.u];
    cert.added.push_back(a);
  }
  cert.cluster_trees = cluster_spanning_trees(cert.augmented, cert.input_edge_count);
  return cert;
}

namespace {

struct Chord {
  FaceId face;
  int a, b;
  VertexId u, v;
};

class Search {
 public:
  Search(const CGraph& cg, const OracleLimits& limits) : cg_(cg), limits_(limits), uf_(cg.map.vertex_slots()) {
    const CombMap& map = cg.map;
    faces_ = FaceTable::trace(map);
    for (FaceId f : faces_.live_faces()) {
      const FacialWalk& w = faces_.walk(f);
      for (int a = 0; a < w.size(); ++a)
        for (int b = a + 1; b < w.size(); ++b) {
          const VertexId u = map.tail(w.corner(a)), v = map.tail(w.corner(b));
          if (u != v && cg.gamma[u] == cg.gamma[v]) chords_.push_back({f, a, b, u, v});
        }
    }
    const auto [comp, ncomp] = map.components();
    comp_ = comp;
    for (EdgeId e = 0; e < map.edge_slots(); ++e) {
      const Edge& ed = map.endpoints(e);
      if (cg.gamma[ed.u] == cg.gamma[ed.v]) uf_.unite(ed.u, ed.v);
    }
    chosen_mask_.assign((chords_.size() + 63) / 64, 0);
  }

  OracleStatus run() {
    const int r = dfs();
    if (r < 0) return OracleStatus::LimitExceeded;
    return r > 0 ? OracleStatus::CPlanar : OracleStatus::NotCPlanar;
  }

  std::vector<ChordRequest> witness() const {
    std::vector<ChordRequest> out;
    for (int i : chosen_) out.push_back({chords_[i].face, chords_[i].a, chords_[i].b});
    return out;
  }
  long nodes() const { return nodes_; }

 private:
  bool same_group(VertexId x, VertexId y) const { return comp_[x] == comp_[y] && cg_.gamma[x] == cg_.gamma[y]; }

  bool compatible(int i) const {
    const Chord& c = chords_[i];
    for (int j : chosen_) {
      const Chord& d = chords_[j];
      if (d.face == c.face && chords_interleave(c.a, c.b, d.a, d.b)) return false;
    }
    return true;
  }

  // Finds a vertex whose set does not yet hold its whole group; -1 when done.
  VertexId unfinished() const {
    const int n = cg_.map.vertex_slots();
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = v + 1; w < n; ++w)
        if (same_group(v, w) && uf_.find(v) != uf_.find(w)) return v;
    return -1;
  }

  // Every unfinished set needs some compatible chord leaving it.
  bool hopeless() const {
    const int n = cg_.map.vertex_slots();
    std::vector<char> open(n, 0), has_exit(n, 0);
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w)
        if (same_group(v, w) && uf_.find(v) != uf_.find(w)) open[uf_.find(v)] = 1;
    for (std::size_t i = 0; i < chords_.size(); ++i) {
      const int ru = uf_.find(chords_[i].u), rv = uf_.find(chords_[i].v);
      if (ru == rv || (!open[ru] && !open[rv])) continue;
      if (has_exit[ru] && has_exit[rv]) continue;
      if (!compatible(static_cast<int>(i))) continue;
      has_exit[ru] = has_exit[rv] = 1;
    }
    for (VertexId v = 0; v < n; ++v)
      if (open[v] && !has_exit[v]) return true;
    return false;
  }

  std::string key() const {
    return std::string(reinterpret_cast<const char*>(chosen_mask_.data()), chosen_mask_.size() * sizeof(std::uint64_t));
  }

  // 1 found, 0 exhausted, -1 limit.
  int dfs() {
    if (++nodes_ > limits_.max_nodes) return -1;
    const VertexId v = unfinished();
    if (v < 0) return 1;
    if (hopeless()) return 0;
    if (!failed_.insert(key()).second) return 0;
    const int root = uf_.find(v);
    for (std::size_t i = 0; i < chords_.size(); ++i) {
      const int ru = uf_.find(chords_[i].u), rv = uf_.find(chords_[i].v);
      if (ru == rv || (ru != root && rv != root)) continue;
      if (!compatible(static_cast<int>(i))) continue;
      uf_.unite(chords_[i].u, chords_[i].v);
      chosen_.push_back(static_cast<int>(i));
      chosen_mask_[i / 64] |= std::uint64_t{1} << (i % 64);
      const int r = dfs();
      if (r != 0) return r;
      chosen_mask_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      chosen_.pop_back();
      uf_.rollback();
    }
    return 0;
  }

  const CGraph& cg_;
  OracleLimits limits_;
  FaceTable faces_;
  std::vector<Chord> chords_;
  std::vector<int> comp_;
  RollbackUnionFind uf_;
  std::vector<int> chosen_;
  std::vector<std::uint64_t> chosen_mask_;
  std::unordered_set<std::string> failed_;
  long nodes_ = 0;
};

}  // namespace

OracleResult oracle_decide(const CGraph& input, const OracleLimits& limits) {
  OracleResult out;
  const bool dense =
      input.map.live_vertex_count() == input.map.vertex_slots() && input.map.live_edge_count() == input.map.edge_slots();
  const CGraph cg = dense ? input : compact_instance(input);
  if (cg.map.vertex_slots() > limits.max_vertices) {
    out.status = OracleStatus::LimitExceeded;
    out.detail = std::to_string(cg.map.vertex_slots()) + " vertices exceed the limit of " +
                 std::to_string(limits.max_vertices);
    return out;
  }
  Search search(cg, limits);
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == OracleStatus::LimitExceeded) {
    out.detail = "search exceeded " + std::to_string(limits.max_nodes) + " nodes";
  } else if (out.status == OracleStatus::CPlanar) {
    out.witness = search.witness();
    out.certificate = witness_certificate(cg, out.witness);
  } else {
    out.detail = "no non-crossing intra-cluster augmentation connects every cluster";
  }
  return out;
}

}  // namespace cplanar
