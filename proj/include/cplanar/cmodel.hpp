#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cplanar/combmap.hpp"

namespace cplanar {

/// An embedded flat clustered graph: a combinatorial map plus a cluster index per vertex.
struct CGraph {
  CombMap map;
  int c = 0;
  std::vector<int> gamma;  // cluster per vertex slot

  int cluster(VertexId v) const { return gamma[v]; }
};

/// Step function on cluster differences: 0 -> 0, {1, 1-c} -> +1, {-1, c-1} -> -1.
int g_step(int c, int delta);

/// g applied to the cluster change along a dart.
int dart_step(const CGraph& cg, DartId d);

/// Sum of g over a closed walk given as consecutive darts.
long height_of_walk(const CGraph& cg, std::span<const DartId> walk);
long winding_number(const CGraph& cg, std::span<const DartId> walk);

enum class FaceClass { Simple, SemiSimple, Other };
const char* face_class_name(FaceClass k);

struct FaceInfo {
  long height = 0;
  long wn = 0;
  std::optional<std::vector<long>> gamma_f;  // only for zero-height faces
  // First occurrence of each local-minimum / local-maximum plateau, in walk order.
  std::vector<int> minima;
  std::vector<int> maxima;
  FaceClass cls = FaceClass::Other;
};

/// Lifted labels along a zero-height walk, anchored at occurrence 0 with gamma(v0).
std::vector<long> gamma_f_labels(const CGraph& cg, const FacialWalk& walk);

/// Local extremes and the Simple / SemiSimple / Other class of a face.
///
/// Extremes are taken over plateaus: a maximal run of occurrences joined by
/// intra-cluster steps counts once. A walk that never changes cluster has one
/// minimum and one maximum. Only zero-height faces can be SemiSimple.
FaceInfo classify_face(const CGraph& cg, const FacialWalk& walk);

struct Poles {
  FaceId outer = -1;        // height +c
  FaceId outer_prime = -1;  // height -c
  // Inter-cluster darts on each pole face; they survive contraction and loop deletion
  // so pole identity can be recovered after any edit.
  DartId outer_dart = kNoDart;
  DartId outer_prime_dart = kNoDart;
};

struct PoleSelection {
  enum class Kind { Poles, AllZero, Reject };
  Kind kind = Kind::Reject;
  Poles poles;
  std::string reason;
};

std::vector<long> face_heights(const CGraph& cg, const FaceTable& faces);

/// Decides the pole pair from the face heights of a connected instance.
PoleSelection select_poles(const CGraph& cg, const FaceTable& faces);

/// Checks the cyclic edge condition and the coverage condition. Throws Error with
/// NotCyclic, MissingInterClusterEdges or ClusterCountTooSmall.
void validate_cyclic(const CGraph& cg);

}  // namespace cplanar
