#pragma once

#include <string>
#include <vector>

#include "cplanar/cmodel.hpp"

namespace cplanar {

enum class Phase { Elimination, Forest };
const char* phase_name(Phase p);

struct AddedEdge {
  EdgeId edge = -1;  // id in the augmented map
  int cluster = 0;
  VertexId u = 0;
  VertexId v = 0;
  Phase phase = Phase::Forest;
  FaceId face_at_insertion = -1;  // face id in the working map of its component
  int component = 0;
};

/// A planar intra-cluster augmentation of an input instance.
///
/// The augmented map keeps the input's vertex and edge ids; added edges follow the
/// input edges. Each cluster is connected inside every connected component.
struct Certificate {
  CGraph augmented;
  int input_vertex_count = 0;
  int input_edge_count = 0;
  std::vector<AddedEdge> added;
  int auxiliary_vertices = 0;  // subdivision vertices used while building, folded away
  std::vector<std::vector<EdgeId>> cluster_trees;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Independent check of a certificate against its input.
VerifyReport verify_certificate(const CGraph& input, const Certificate& cert);

}  // namespace cplanar
