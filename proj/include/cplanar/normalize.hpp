#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplanar/cmodel.hpp"

namespace cplanar {

/// One connected component of an instance, renumbered densely.
struct Component {
  CGraph cg;
  std::vector<VertexId> to_input_vertex;
  std::vector<EdgeId> to_input_edge;
};

std::vector<Component> split_components(const CGraph& cg);

struct ContractOutcome {
  bool rejected = false;
  std::string reason;
  int contractions = 0;
  int loops_deleted = 0;
};

/// Contracts every intra-cluster edge (lowest edge id first) and deletes the loops this
/// produces. The map must be connected. A loop whose side away from the outer pole holds a vertex of another
/// cluster rejects the instance. `representative` (sized to the vertex slots) is
/// updated so that following it from any vertex ends at its surviving vertex.
ContractOutcome contract_clusters(CGraph& cg, const Poles& poles, std::vector<VertexId>* representative = nullptr);

/// The minimal monotone run P of a face and its two flanking walks Q' (before) and
/// Q (after), all as occurrence indices of the facial walk.
struct MinRun {
  int u = 0;        // start of P (an extreme)
  int v = 0;        // end of P (the opposite extreme)
  int v_prime = 0;  // end of Q
  int u_prime = 0;  // start of Q'
  int h = 0;        // |height(P)|
  bool ascending = true;
};

MinRun find_min_run(const CGraph& cg, const FacialWalk& walk);

struct SubdivisionRecord {
  FaceId face = -1;
  FaceId f_prime = -1;   // keeps the height of the subdivided face
  FaceId f_dprime = -1;  // zero height, semi-simple
  long height = 0;
  int h = 0;
  std::vector<VertexId> new_vertices;
  std::vector<EdgeId> new_edges;
};

/// Splits a non-conforming face with a strictly monotone path from v' to u'. The face
/// table is updated in place; new vertices get their cluster labels. The height and
/// class postconditions on both halves are checked before returning.
SubdivisionRecord subdivide_face(CGraph& cg, FaceTable& faces, FaceId face);

struct Provenance {
  int input_vertex_count = 0;
  int input_edge_count = 0;
  std::vector<VertexId> representative;  // per input vertex, its vertex after contraction
  std::vector<SubdivisionRecord> subdivisions;
  int contractions = 0;
  int loops_deleted = 0;
};

struct NormalizedCGraph {
  CGraph cg;
  Poles poles;
  FaceTable faces;
  Provenance provenance;
};

struct NormalizeOutcome {
  std::optional<NormalizedCGraph> normalized;
  std::string rejection;
};

/// Contracts clusters, then subdivides the first non-conforming face (by face id)
/// until every face is simple or semi-simple and both poles are simple.
NormalizeOutcome normalize(CGraph cg, Poles poles);

/// Throws InternalInvariantViolation unless the instance is connected, has independent
/// clusters, spherical, and every face conforms with simple poles.
void check_normalized(const NormalizedCGraph& n);

}  // namespace cplanar
