#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cplanar/error.hpp"

namespace cplanar {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

inline constexpr DartId kNoDart = -1;

// Edge e owns darts 2e (leaving endpoint u) and 2e+1 (leaving endpoint v).
constexpr DartId twin(DartId d) { return d ^ 1; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }
constexpr DartId dart_of(EdgeId e, int side) { return 2 * e + side; }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool operator==(const Edge&) const = default;
};

/// Combinatorial map of a graph embedded on the sphere.
///
/// Each vertex stores the counterclockwise cyclic order of its outgoing darts
/// as a doubly linked ring. Vertices and edges are never renumbered: contraction
/// and deletion leave dead slots behind, additions append. Every edit bumps
/// generation(), which invalidates previously traced FaceTables.
///
/// Loops and parallel edges are first-class.
class CombMap {
 public:
  CombMap() = default;

  /// Builds and validates a map. Rotation lists must hold every dart exactly once,
  /// each at its tail. Each connected component must satisfy V - E + F = 2.
  static CombMap build(int vertex_count, std::vector<Edge> edges,
                       const std::vector<std::vector<DartId>>& rotation);

  int vertex_slots() const { return static_cast<int>(first_dart_.size()); }
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  int dart_slots() const { return 2 * edge_slots(); }
  int live_vertex_count() const;
  int live_edge_count() const;

  bool vertex_alive(VertexId v) const { return vertex_alive_[v] != 0; }
  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
  bool dart_alive(DartId d) const { return edge_alive(edge_of(d)); }

  const Edge& endpoints(EdgeId e) const { return edges_[e]; }
  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return tail_[twin(d)]; }
  bool is_loop(EdgeId e) const { return edges_[e].u == edges_[e].v; }

  DartId rot_next(DartId d) const { return next_[d]; }
  DartId rot_prev(DartId d) const { return prev_[d]; }
  /// Successor of d in its facial walk: the rotation-predecessor of twin(d) at head(d).
  DartId face_next(DartId d) const { return prev_[twin(d)]; }

  DartId first_dart(VertexId v) const { return first_dart_[v]; }
  int degree(VertexId v) const;
  std::vector<DartId> rotation(VertexId v) const;
  std::vector<std::vector<DartId>> rotations() const;

  std::uint64_t generation() const { return generation_; }

  int face_count() const;
  /// Connected components over live vertices; returns a component index per vertex slot
  /// (-1 for dead slots) and the count.
  std::pair<std::vector<int>, int> components() const;
  /// Sum over components of (V - E + F); equals 2 * components for spherical maps.
  int euler_characteristic() const;

  /// Twin involution, ring consistency, tails, and Euler check. Throws on failure.
  void debug_validate() const;

  // ---- edits -------------------------------------------------------------

  VertexId add_vertex();
  /// Adds edge (a, b). Dart 2e is spliced right after after_a in the rotation of a,
  /// dart 2e+1 right after after_b at b. kNoDart is allowed only for an isolated vertex.
  EdgeId add_edge(VertexId a, DartId after_a, VertexId b, DartId after_b);
  void delete_edge(EdgeId e);
  /// Contracts a non-loop edge, merging the other endpoint into `keep`. The rotation of
  /// the merged vertex is the rotation of `keep` with the rotation of the other endpoint
  /// spliced in where e used to be. Returns edges that became loops.
  std::vector<EdgeId> contract(EdgeId e, VertexId keep);
  std::vector<EdgeId> contract(EdgeId e) { return contract(e, edges_[e].u); }

  /// Creates edge (a, b) whose darts are not yet in any rotation. Both darts must be
  /// placed with link_after() before the map is used again.
  EdgeId add_unlinked_edge(VertexId a, VertexId b);
  /// Inserts dart x (already created, unlinked) right after dart `after` at vertex v.
  void link_after(DartId after, DartId x, VertexId v);

  /// Dense copy without dead slots; old_to_new maps for vertices and edges (-1 if dead).
  struct Compacted;
  Compacted compacted() const;

 private:
  EdgeId create_edge(VertexId a, VertexId b);
  void unlink(DartId d);
  void touch() { ++generation_; }

  std::vector<Edge> edges_;
  std::vector<char> edge_alive_;
  std::vector<char> vertex_alive_;
  std::vector<DartId> first_dart_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
  std::vector<VertexId> tail_;
  std::uint64_t generation_ = 0;
};

struct CombMap::Compacted {
  CombMap map;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

/// Closed boundary walk of a face. Occurrence k is the vertex tail(darts[k]),
/// sitting in the wedge between darts[k-1] and darts[k]; its corner dart is darts[k].
struct FacialWalk {
  std::vector<DartId> darts;
  int size() const { return static_cast<int>(darts.size()); }
  DartId corner(int occ) const { return darts[occ]; }
};

/// All facial walks of a map plus the dart -> (face, position) index.
///
/// A table is bound to the map generation it was traced from. Operations that take a
/// face handle refuse stale tables; retrace() updates a table incrementally after edits
/// that only touched the faces being retraced.
class FaceTable {
 public:
  static FaceTable trace(const CombMap& map);

  int face_slots() const { return static_cast<int>(walks_.size()); }
  int live_face_count() const { return live_; }
  bool face_alive(FaceId f) const { return alive_[f] != 0; }
  const FacialWalk& walk(FaceId f) const { return walks_[f]; }
  FaceId face_of(DartId d) const { return face_of_dart_[d]; }
  int position_of(DartId d) const { return pos_of_dart_[d]; }
  std::vector<FaceId> live_faces() const;

  std::uint64_t generation() const { return generation_; }
  bool is_current(const CombMap& map) const { return generation_ == map.generation(); }
  void require_current(const CombMap& map) const;

  /// Traces the walk through `start` as a fresh face id. Any face that previously owned
  /// one of its darts is retired. Call for every face created by an edit, then the
  /// table is current again.
  FaceId retrace(const CombMap& map, DartId start);

 private:
  void grow(const CombMap& map);

  std::vector<FacialWalk> walks_;
  std::vector<char> alive_;
  std::vector<FaceId> face_of_dart_;
  std::vector<int> pos_of_dart_;
  int live_ = 0;
  std::uint64_t generation_ = 0;
};

/// Chord request inside one face: two distinct occurrence indices of the face walk.
struct ChordRequest {
  FaceId face = 0;
  int occ_a = 0;
  int occ_b = 0;
};

// ---- operations -----------------------------------------------------------

CombMap build_map(int vertex_count, std::vector<Edge> edges,
                  const std::vector<std::vector<DartId>>& rotation);

FaceTable trace_faces(const CombMap& map);

/// Contracts e in place (e must not be a loop); the surviving vertex is endpoint u.
std::vector<EdgeId> contract_edge(CombMap& map, EdgeId e);

/// Adds a chord inside `face` between two of its occurrences. The face splits in two.
EdgeId insert_chord(CombMap& map, const FaceTable& faces, FaceId face, int occ_a, int occ_b);

struct InsertedPath {
  std::vector<VertexId> vertices;  // internal vertices, in order from occ_a
  std::vector<EdgeId> edges;       // k + 1 edges, in order from occ_a
};
/// Adds a path with k internal degree-2 vertices inside `face` from occ_a to occ_b.
InsertedPath insert_path(CombMap& map, const FaceTable& faces, FaceId face, int occ_a,
                         int occ_b, int k);

/// Inserts a family of pairwise non-interleaving chords all at once. Chords sharing a
/// corner are nested by their forward distance along the walk. Returns new edge ids
/// in request order.
std::vector<EdgeId> insert_chords(CombMap& map, const FaceTable& faces,
                                  std::span<const ChordRequest> chords);

/// True when chords (a,b) and (x,y) on a cyclic sequence strictly interleave.
bool chords_interleave(int a, int b, int x, int y);

struct RegionPartition {
  std::vector<FaceId> faces_in;
  std::vector<VertexId> verts_in;
};
/// Faces and vertices on the side of loop_edge that does not contain reference_face.
RegionPartition region_partition(const CombMap& map, const FaceTable& faces, EdgeId loop_edge,
                                 FaceId reference_face);

/// Dart-level variant: darts and vertices on the side of the loop away from
/// `reference_dart`.
struct DartRegion {
  std::vector<DartId> darts_in;
  std::vector<VertexId> verts_in;
};
DartRegion loop_interior(const CombMap& map, EdgeId loop_edge, DartId reference_dart);

/// The side of a separating loop that closes first in a lockstep search, so the
/// cost is linear in the smaller side. verts excludes the loop's own vertex.
struct LoopSide {
  std::vector<DartId> darts;
  std::vector<VertexId> verts;
  bool has_reference = false;
};
LoopSide smaller_loop_side(const CombMap& map, EdgeId loop_edge, DartId reference_dart);

}  // namespace cplanar
