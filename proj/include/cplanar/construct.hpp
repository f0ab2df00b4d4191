#pragma once

#include <vector>

#include "cplanar/decide.hpp"

namespace cplanar {

struct ChordLog {
  EdgeId edge = -1;
  VertexId from = -1;  // explicit direction used by the sink/source check
  Phase phase = Phase::Elimination;
  FaceId face = -1;
};

/// Adds one chord per matched sink/source inside its matched face, sources first.
/// Afterwards no sink or source remains and every cluster is acyclic (both asserted).
std::vector<ChordLog> eliminate_extremes(NormalizedCGraph& n, const IncidenceGraph& g,
                                         const std::vector<int>& match);

struct Candidate {
  FaceId face = -1;
  long level = 0;
  int occ_a = 0;  // ascending side
  int occ_b = 0;  // descending side
};

/// Per-level chords inside every inner face other than the poles.
std::vector<Candidate> chord_candidates(const NormalizedCGraph& n);

/// Greedy acyclic subset, seeded with the intra-cluster edges already present.
std::vector<Candidate> maximal_forest(const NormalizedCGraph& n, const std::vector<Candidate>& cands);

/// Inserts the forest chords and asserts that each cluster is a spanning tree.
std::vector<ChordLog> insert_forest(NormalizedCGraph& n, const std::vector<Candidate>& forest);

void assert_no_sinks_sources(const NormalizedCGraph& n, const std::vector<ChordLog>& chords);
void assert_cluster_forest(const CGraph& cg);
void assert_cluster_trees(const CGraph& cg);

/// Maps the augmented working graph of one component back onto the component's input
/// map and folds away subdivision vertices.
Certificate build_certificate(const CGraph& input, const NormalizedCGraph& n, const std::vector<ChordLog>& chords);

/// Merges per-component certificates into one over the whole input.
Certificate combine_certificates(const CGraph& input, const std::vector<Component>& parts,
                                 const std::vector<Certificate>& certs);

/// Spanning forest of each cluster's intra-cluster subgraph, input edges first.
std::vector<std::vector<EdgeId>> cluster_spanning_trees(const CGraph& cg, int input_edge_count);

}  // namespace cplanar
