#include "cplanar/combmap.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "cplanar/union_find.hpp"

namespace cplanar {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::NonSpherical: return "NonSpherical";
    case Errc::DisconnectedMapRequested: return "DisconnectedMapRequested";
    case Errc::LoopContraction: return "LoopContraction";
    case Errc::OccurrenceNotOnFace: return "OccurrenceNotOnFace";
    case Errc::StaleFaceHandle: return "StaleFaceHandle";
    case Errc::NotALoop: return "NotALoop";
    case Errc::ReferenceOnBothSides: return "ReferenceOnBothSides";
    case Errc::IllegalDelta: return "IllegalDelta";
    case Errc::NotClosed: return "NotClosed";
    case Errc::InternalNonDivisible: return "InternalNonDivisible";
    case Errc::NonZeroHeightFace: return "NonZeroHeightFace";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::MissingInterClusterEdges: return "MissingInterClusterEdges";
    case Errc::ClusterCountTooSmall: return "ClusterCountTooSmall";
    case Errc::FaceAlreadyConforming: return "FaceAlreadyConforming";
    case Errc::IntraClusterEdge: return "IntraClusterEdge";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ==========================================================================
// CombMap
// ==========================================================================

CombMap CombMap::build(int vertex_count, std::vector<Edge> edges,
                       const std::vector<std::vector<DartId>>& rotation) {
  if (vertex_count < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw Error(Errc::MalformedRotation, "expected " + std::to_string(vertex_count) +
                                             " rotation lists, got " +
                                             std::to_string(rotation.size()));
  const int m = static_cast<int>(edges.size());
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges[e];
    if (ed.u < 0 || ed.u >= vertex_count || ed.v < 0 || ed.v >= vertex_count)
      throw Error(Errc::MalformedRotation, "edge " + std::to_string(e) + " has an endpoint out of range");
  }

  CombMap map;
  map.edges_ = std::move(edges);
  map.edge_alive_.assign(m, 1);
  map.vertex_alive_.assign(vertex_count, 1);
  map.first_dart_.assign(vertex_count, kNoDart);
  map.next_.assign(2 * m, kNoDart);
  map.prev_.assign(2 * m, kNoDart);
  map.tail_.resize(2 * m);
  for (int e = 0; e < m; ++e) {
    map.tail_[2 * e] = map.edges_[e].u;
    map.tail_[2 * e + 1] = map.edges_[e].v;
  }

  std::vector<char> seen(2 * m, 0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& rot = rotation[v];
    for (DartId d : rot) {
      if (d < 0 || d >= 2 * m)
        throw Error(Errc::MalformedRotation, "dart " + std::to_string(d) + " does not exist");
      if (seen[d])
        throw Error(Errc::MalformedRotation, "dart " + std::to_string(d) + " listed twice");
      if (map.tail_[d] != v)
        throw Error(Errc::MalformedRotation, "dart " + std::to_string(d) + " listed at vertex " +
                                                 std::to_string(v) + " but leaves vertex " +
                                                 std::to_string(map.tail_[d]));
      seen[d] = 1;
    }
    const int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i) {
      map.next_[rot[i]] = rot[(i + 1) % k];
      map.prev_[rot[i]] = rot[(i + k - 1) % k];
    }
    if (k > 0) map.first_dart_[v] = rot[0];
  }
  for (DartId d = 0; d < 2 * m; ++d)
    if (!seen[d]) throw Error(Errc::MalformedRotation, "dart " + std::to_string(d) + " missing from rotations");

  auto [comp, ncomp] = map.components();
  if (map.euler_characteristic() != 2 * ncomp)
    throw Error(Errc::NonSpherical, "Euler characteristic " + std::to_string(map.euler_characteristic()) +
                                        " over " + std::to_string(ncomp) + " component(s)");
  return map;
}

int CombMap::live_vertex_count() const {
  return static_cast<int>(std::count(vertex_alive_.begin(), vertex_alive_.end(), 1));
}

int CombMap::live_edge_count() const {
  return static_cast<int>(std::count(edge_alive_.begin(), edge_alive_.end(), 1));
}

int CombMap::degree(VertexId v) const {
  const DartId f = first_dart_[v];
  if (f == kNoDart) return 0;
  int k = 0;
  DartId d = f;
  do {
    ++k;
    d = next_[d];
  } while (d != f);
  return k;
}

std::vector<DartId> CombMap::rotation(VertexId v) const {
  std::vector<DartId> out;
  const DartId f = first_dart_[v];
  if (f == kNoDart) return out;
  DartId d = f;
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != f);
  return out;
}

std::vector<std::vector<DartId>> CombMap::rotations() const {
  std::vector<std::vector<DartId>> out(vertex_slots());
  for (VertexId v = 0; v < vertex_slots(); ++v)
    if (vertex_alive(v)) out[v] = rotation(v);
  return out;
}

int CombMap::face_count() const {
  std::vector<char> seen(dart_slots(), 0);
  int faces = 0;
  for (DartId d = 0; d < dart_slots(); ++d) {
    if (!dart_alive(d) || seen[d]) continue;
    ++faces;
    DartId x = d;
    do {
      seen[x] = 1;
      x = face_next(x);
    } while (x != d);
  }
  return faces;
}

std::pair<std::vector<int>, int> CombMap::components() const {
  UnionFind uf(vertex_slots());
  for (EdgeId e = 0; e < edge_slots(); ++e)
    if (edge_alive(e)) uf.unite(edges_[e].u, edges_[e].v);
  std::vector<int> comp(vertex_slots(), -1);
  std::vector<int> root_index(vertex_slots(), -1);
  int count = 0;
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!vertex_alive(v)) continue;
    const int r = uf.find(v);
    if (root_index[r] < 0) root_index[r] = count++;
    comp[v] = root_index[r];
  }
  return {comp, count};
}

int CombMap::euler_characteristic() const {
  int isolated = 0;
  for (VertexId v = 0; v < vertex_slots(); ++v)
    if (vertex_alive(v) && first_dart_[v] == kNoDart) ++isolated;
  // An isolated vertex sits in one face of its own.
  return live_vertex_count() - live_edge_count() + face_count() + isolated;
}

void CombMap::debug_validate() const {
  for (DartId d = 0; d < dart_slots(); ++d) {
    if (!dart_alive(d)) continue;
    if (twin(twin(d)) != d) invariant_violation("twin is not an involution");
    if (tail_[twin(d)] != head(d)) invariant_violation("twin tail mismatch");
    if (prev_[next_[d]] != d || next_[prev_[d]] != d)
      invariant_violation("rotation ring broken at dart " + std::to_string(d));
    if (!vertex_alive(tail_[d])) invariant_violation("dart leaves a dead vertex");
    const Edge& e = edges_[edge_of(d)];
    if (tail_[d] != ((d & 1) ? e.v : e.u)) invariant_violation("edge endpoints disagree with dart tails");
  }
  std::vector<char> seen(dart_slots(), 0);
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!vertex_alive(v)) {
      if (first_dart_[v] != kNoDart) invariant_violation("dead vertex owns darts");
      continue;
    }
    for (DartId d : rotation(v)) {
      if (tail_[d] != v) invariant_violation("dart in the wrong rotation");
      if (seen[d]) invariant_violation("dart in two rotations");
      seen[d] = 1;
    }
  }
  for (DartId d = 0; d < dart_slots(); ++d)
    if (dart_alive(d) && !seen[d]) invariant_violation("dart in no rotation");
  auto [comp, ncomp] = components();
  if (euler_characteristic() != 2 * ncomp) invariant_violation("map is no longer spherical");
}

VertexId CombMap::add_vertex() {
  vertex_alive_.push_back(1);
  first_dart_.push_back(kNoDart);
  touch();
  return vertex_slots() - 1;
}

EdgeId CombMap::create_edge(VertexId a, VertexId b) {
  const EdgeId e = edge_slots();
  edges_.push_back({a, b});
  edge_alive_.push_back(1);
  for (int s = 0; s < 2; ++s) {
    next_.push_back(2 * e + s);
    prev_.push_back(2 * e + s);
    tail_.push_back(s == 0 ? a : b);
  }
  return e;
}

void CombMap::link_after(DartId after, DartId x, VertexId v) {
  if (after == kNoDart) {
    if (first_dart_[v] != kNoDart)
      throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " is not isolated");
    first_dart_[v] = x;
    next_[x] = prev_[x] = x;
    return;
  }
  if (tail_[after] != v) throw Error(Errc::InvalidArgument, "corner dart does not leave the vertex");
  const DartId n = next_[after];
  next_[x] = n;
  prev_[x] = after;
  prev_[n] = x;
  next_[after] = x;
}

EdgeId CombMap::add_unlinked_edge(VertexId a, VertexId b) {
  if (!vertex_alive(a) || !vertex_alive(b)) throw Error(Errc::InvalidArgument, "dead endpoint");
  const EdgeId e = create_edge(a, b);
  touch();
  return e;
}

EdgeId CombMap::add_edge(VertexId a, DartId after_a, VertexId b, DartId after_b) {
  if (!vertex_alive(a) || !vertex_alive(b)) throw Error(Errc::InvalidArgument, "dead endpoint");
  if (after_a != kNoDart && !dart_alive(after_a)) throw Error(Errc::InvalidArgument, "dead corner dart");
  if (after_b != kNoDart && !dart_alive(after_b)) throw Error(Errc::InvalidArgument, "dead corner dart");
  const EdgeId e = create_edge(a, b);
  link_after(after_a, 2 * e, a);
  if (after_b == kNoDart && a == b) after_b = 2 * e;
  link_after(after_b, 2 * e + 1, b);
  touch();
  return e;
}

void CombMap::unlink(DartId d) {
  const VertexId v = tail_[d];
  if (next_[d] == d) {
    first_dart_[v] = kNoDart;
  } else {
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (first_dart_[v] == d) first_dart_[v] = next_[d];
  }
  next_[d] = prev_[d] = d;
}

void CombMap::delete_edge(EdgeId e) {
  if (!edge_alive(e)) throw Error(Errc::InvalidArgument, "edge already deleted");
  unlink(2 * e);
  unlink(2 * e + 1);
  edge_alive_[e] = 0;
  touch();
}

std::vector<EdgeId> CombMap::contract(EdgeId e, VertexId keep) {
  if (!edge_alive(e)) throw Error(Errc::InvalidArgument, "edge already deleted");
  if (is_loop(e)) throw Error(Errc::LoopContraction, "edge " + std::to_string(e) + " is a loop");
  const Edge ed = edges_[e];
  if (keep != ed.u && keep != ed.v) throw Error(Errc::InvalidArgument, "keep is not an endpoint");
  const VertexId other = keep == ed.u ? ed.v : ed.u;
  const DartId du = keep == ed.u ? 2 * e : 2 * e + 1;
  const DartId dv = twin(du);

  const DartId a = prev_[du], b = next_[du];
  const DartId c = prev_[dv], d = next_[dv];
  const bool keep_single = b == du;
  const bool other_single = d == dv;

  std::vector<EdgeId> loops;
  for (DartId x = d; x != dv; x = next_[x]) {
    tail_[x] = keep;
    Edge& xe = edges_[edge_of(x)];
    ((x & 1) ? xe.v : xe.u) = keep;
    if (xe.u == xe.v) loops.push_back(edge_of(x));
  }

  if (other_single) {
    unlink(du);
  } else if (keep_single) {
    next_[c] = d;
    prev_[d] = c;
    first_dart_[keep] = d;
  } else {
    next_[a] = d;
    prev_[d] = a;
    next_[c] = b;
    prev_[b] = c;
    if (first_dart_[keep] == du) first_dart_[keep] = d;
  }
  next_[du] = prev_[du] = du;
  next_[dv] = prev_[dv] = dv;
  edge_alive_[e] = 0;
  vertex_alive_[other] = 0;
  first_dart_[other] = kNoDart;
  touch();

  std::sort(loops.begin(), loops.end());
  loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
  return loops;
}

CombMap::Compacted CombMap::compacted() const {
  Compacted out;
  out.vertex_map.assign(vertex_slots(), -1);
  out.edge_map.assign(edge_slots(), -1);
  int nv = 0, ne = 0;
  for (VertexId v = 0; v < vertex_slots(); ++v)
    if (vertex_alive(v)) out.vertex_map[v] = nv++;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < edge_slots(); ++e) {
    if (!edge_alive(e)) continue;
    out.edge_map[e] = ne++;
    edges.push_back({out.vertex_map[edges_[e].u], out.vertex_map[edges_[e].v]});
  }
  std::vector<std::vector<DartId>> rot(nv);
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!vertex_alive(v)) continue;
    for (DartId d : rotation(v)) rot[out.vertex_map[v]].push_back(2 * out.edge_map[edge_of(d)] + (d & 1));
  }
  out.map = build(nv, std::move(edges), rot);
  return out;
}

// ==========================================================================
// FaceTable
// ==========================================================================

FaceTable FaceTable::trace(const CombMap& map) {
  FaceTable t;
  t.face_of_dart_.assign(map.dart_slots(), -1);
  t.pos_of_dart_.assign(map.dart_slots(), -1);
  for (DartId d = 0; d < map.dart_slots(); ++d) {
    if (!map.dart_alive(d) || t.face_of_dart_[d] >= 0) continue;
    const FaceId f = t.face_slots();
    FacialWalk w;
    DartId x = d;
    do {
      t.face_of_dart_[x] = f;
      t.pos_of_dart_[x] = w.size();
      w.darts.push_back(x);
      x = map.face_next(x);
    } while (x != d);
    t.walks_.push_back(std::move(w));
    t.alive_.push_back(1);
    ++t.live_;
  }
  t.generation_ = map.generation();
  return t;
}

std::vector<FaceId> FaceTable::live_faces() const {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < face_slots(); ++f)
    if (alive_[f]) out.push_back(f);
  return out;
}

void FaceTable::require_current(const CombMap& map) const {
  if (!is_current(map))
    throw Error(Errc::StaleFaceHandle, "face table was traced before the latest edit of the map");
}

void FaceTable::grow(const CombMap& map) {
  if (static_cast<int>(face_of_dart_.size()) < map.dart_slots()) {
    face_of_dart_.resize(map.dart_slots(), -1);
    pos_of_dart_.resize(map.dart_slots(), -1);
  }
}

FaceId FaceTable::retrace(const CombMap& map, DartId start) {
  grow(map);
  const FaceId f = face_slots();
  FacialWalk w;
  DartId x = start;
  do {
    const FaceId old = face_of_dart_[x];
    if (old >= 0 && alive_[old]) {
      alive_[old] = 0;
      --live_;
    }
    face_of_dart_[x] = f;
    pos_of_dart_[x] = w.size();
    w.darts.push_back(x);
    x = map.face_next(x);
  } while (x != start);
  walks_.push_back(std::move(w));
  alive_.push_back(1);
  ++live_;
  generation_ = map.generation();
  return f;
}

// ==========================================================================
// Operations
// ==========================================================================

CombMap build_map(int vertex_count, std::vector<Edge> edges,
                  const std::vector<std::vector<DartId>>& rotation) {
  return CombMap::build(vertex_count, std::move(edges), rotation);
}

FaceTable trace_faces(const CombMap& map) { return FaceTable::trace(map); }

std::vector<EdgeId> contract_edge(CombMap& map, EdgeId e) { return map.contract(e); }

bool chords_interleave(int a, int b, int x, int y) {
  if (a == x || a == y || b == x || b == y) return false;
  const int lo = std::min(a, b), hi = std::max(a, b);
  const bool x_in = lo < x && x < hi;
  const bool y_in = lo < y && y < hi;
  return x_in != y_in;
}

namespace {

void check_occurrences(const FaceTable& faces, FaceId face, int occ_a, int occ_b) {
  if (face < 0 || face >= faces.face_slots() || !faces.face_alive(face))
    throw Error(Errc::OccurrenceNotOnFace, "face " + std::to_string(face) + " does not exist");
  const int len = faces.walk(face).size();
  if (occ_a < 0 || occ_a >= len || occ_b < 0 || occ_b >= len)
    throw Error(Errc::OccurrenceNotOnFace, "occurrence index outside the facial walk");
  if (occ_a == occ_b) throw Error(Errc::OccurrenceNotOnFace, "chord endpoints are the same occurrence");
}

}  // namespace

std::vector<EdgeId> insert_chords(CombMap& map, const FaceTable& faces,
                                  std::span<const ChordRequest> chords) {
  faces.require_current(map);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    check_occurrences(faces, chords[i].face, chords[i].occ_a, chords[i].occ_b);
    for (std::size_t j = 0; j < i; ++j)
      if (chords[j].face == chords[i].face &&
          chords_interleave(chords[i].occ_a, chords[i].occ_b, chords[j].occ_a, chords[j].occ_b))
        throw Error(Errc::InvalidArgument, "requested chords cross each other");
  }

  // Per corner dart: (forward distance, tie-break, new dart).
  struct Slot {
    int dist;
    long tie;
    DartId dart;
  };
  std::vector<std::pair<DartId, Slot>> slots;
  std::vector<EdgeId> created;
  created.reserve(chords.size());
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const FacialWalk& w = faces.walk(chords[i].face);
    const int len = w.size();
    const int a = chords[i].occ_a, b = chords[i].occ_b;
    const DartId ca = w.corner(a), cb = w.corner(b);
    const EdgeId e = map.add_unlinked_edge(map.tail(ca), map.tail(cb));
    created.push_back(e);
    const long idx = static_cast<long>(i);
    const bool a_first = a < b;
    slots.push_back({ca, {(b - a + len) % len, a_first ? idx : -idx, 2 * e}});
    slots.push_back({cb, {(a - b + len) % len, a_first ? -idx : idx, 2 * e + 1}});
  }
  std::stable_sort(slots.begin(), slots.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.dist, x.second.tie) < std::tie(y.first, y.second.dist, y.second.tie);
  });
  DartId corner = kNoDart, after = kNoDart;
  for (const auto& [c, s] : slots) {
    if (c != corner) {
      corner = c;
      after = c;
    }
    map.link_after(after, s.dart, map.tail(c));
    after = s.dart;
  }
  return created;
}

EdgeId insert_chord(CombMap& map, const FaceTable& faces, FaceId face, int occ_a, int occ_b) {
  const ChordRequest req{face, occ_a, occ_b};
  return insert_chords(map, faces, std::span<const ChordRequest>(&req, 1)).front();
}

InsertedPath insert_path(CombMap& map, const FaceTable& faces, FaceId face, int occ_a, int occ_b,
                         int k) {
  faces.require_current(map);
  check_occurrences(faces, face, occ_a, occ_b);
  if (k < 0) throw Error(Errc::InvalidArgument, "negative path length");
  InsertedPath out;
  if (k == 0) {
    out.edges.push_back(insert_chord(map, faces, face, occ_a, occ_b));
    return out;
  }
  const FacialWalk& w = faces.walk(face);
  const DartId ca = w.corner(occ_a), cb = w.corner(occ_b);
  VertexId prev = map.tail(ca);
  DartId prev_corner = ca;
  for (int i = 0; i < k; ++i) {
    const VertexId x = map.add_vertex();
    const EdgeId e = map.add_edge(prev, prev_corner, x, kNoDart);
    out.vertices.push_back(x);
    out.edges.push_back(e);
    prev = x;
    prev_corner = 2 * e + 1;
  }
  out.edges.push_back(map.add_edge(prev, prev_corner, map.tail(cb), cb));
  return out;
}

namespace {

struct LoopSearch {
  struct Side {
    std::vector<DartId> darts;
    std::size_t head = 0;
    bool has_reference = false;
    bool done() const { return head >= darts.size(); }
  };
  const CombMap& map;
  EdgeId loop_edge;
  DartId reference_dart;
  Side sides[2];
  std::vector<signed char>& owner;

  static std::vector<signed char>& scratch(int slots) {
    // Marks are reused across calls and reset for the touched darts only.
    thread_local std::vector<signed char> marks;
    if (static_cast<int>(marks.size()) < slots) marks.resize(slots, -1);
    return marks;
  }

  LoopSearch(const CombMap& m, EdgeId loop, DartId ref)
      : map(m), loop_edge(loop), reference_dart(ref), owner(scratch(m.dart_slots())) {
    if (!map.edge_alive(loop_edge) || !map.is_loop(loop_edge))
      throw Error(Errc::NotALoop, "edge " + std::to_string(loop_edge) + " is not a loop");
    if (reference_dart < 0 || reference_dart >= map.dart_slots() || !map.edge_alive(edge_of(reference_dart)))
      throw Error(Errc::ReferenceOnBothSides, "reference dart is not live");
  }
  ~LoopSearch() {
    for (Side& s : sides)
      for (DartId d : s.darts) owner[d] = -1;
  }

  void visit(int s, DartId d) {
    if (owner[d] == s) return;
    if (owner[d] >= 0)
      throw Error(Errc::ReferenceOnBothSides, "loop " + std::to_string(loop_edge) + " does not separate");
    owner[d] = static_cast<signed char>(s);
    sides[s].darts.push_back(d);
    if (d == reference_dart) sides[s].has_reference = true;
  }
  void step(int s) {
    const DartId d = sides[s].darts[sides[s].head++];
    visit(s, map.face_next(d));
    if (edge_of(d) != loop_edge) visit(s, twin(d));
  }
  // Grows both sides in lockstep and returns the first side to close.
  int smaller() {
    visit(0, 2 * loop_edge);
    visit(1, 2 * loop_edge + 1);
    for (;;)
      for (int s = 0; s < 2; ++s) {
        if (sides[s].done()) return s;
        step(s);
      }
  }
  void finish(int s) {
    while (!sides[s].done()) step(s);
  }
  std::vector<VertexId> vertices(int s, VertexId base) const {
    std::vector<VertexId> out;
    for (DartId d : sides[s].darts)
      if (map.tail(d) != base) out.push_back(map.tail(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

}  // namespace

DartRegion loop_interior(const CombMap& map, EdgeId loop_edge, DartId reference_dart) {
  LoopSearch search(map, loop_edge, reference_dart);
  const int first = search.smaller();
  int inside = search.sides[first].has_reference ? 1 - first : first;
  search.finish(inside);
  if (search.sides[inside].has_reference)
    throw Error(Errc::ReferenceOnBothSides, "reference dart reached from both sides of the loop");
  if (inside == first) {
    search.finish(1 - first);
    if (!search.sides[1 - first].has_reference)
      throw Error(Errc::ReferenceOnBothSides, "reference dart lies on neither side of the loop");
  }
  DartRegion out;
  out.darts_in = search.sides[inside].darts;
  out.verts_in = search.vertices(inside, map.endpoints(loop_edge).u);
  return out;
}

LoopSide smaller_loop_side(const CombMap& map, EdgeId loop_edge, DartId reference_dart) {
  LoopSearch search(map, loop_edge, reference_dart);
  const int s = search.smaller();
  LoopSide out;
  out.has_reference = search.sides[s].has_reference;
  out.darts = search.sides[s].darts;
  out.verts = search.vertices(s, map.endpoints(loop_edge).u);
  return out;
}

RegionPartition region_partition(const CombMap& map, const FaceTable& faces, EdgeId loop_edge,
                                 FaceId reference_face) {
  faces.require_current(map);
  if (reference_face < 0 || reference_face >= faces.face_slots() || !faces.face_alive(reference_face))
    throw Error(Errc::InvalidArgument, "reference face does not exist");
  const DartRegion dr = loop_interior(map, loop_edge, faces.walk(reference_face).darts.front());
  RegionPartition out;
  out.verts_in = dr.verts_in;
  for (DartId d : dr.darts_in) out.faces_in.push_back(faces.face_of(d));
  std::sort(out.faces_in.begin(), out.faces_in.end());
  out.faces_in.erase(std::unique(out.faces_in.begin(), out.faces_in.end()), out.faces_in.end());
  return out;
}

}  // namespace cplanar
