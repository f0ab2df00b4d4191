#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplanar/certificate.hpp"
#include "cplanar/normalize.hpp"

namespace cplanar {

/// Edge directions from the smaller to the bigger label under 0 < 1 < ... < c-1 < 0.
struct Orientation {
  std::vector<VertexId> from;  // per edge slot, -1 for dead edges
  std::vector<int> indeg;
  std::vector<int> outdeg;
};

Orientation orient(const CGraph& cg);

struct Extremes {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
};

Extremes sinks_sources(const CGraph& cg, const Orientation& o);

/// Bipartite graph between sinks/sources and the faces that must absorb them.
struct IncidenceGraph {
  std::vector<VertexId> s;      // sources first, then sinks, each ascending
  std::vector<char> is_source;  // parallel to s
  std::vector<FaceId> f;        // semi-simple faces ascending, then qualifying poles
  std::vector<char> optional;   // parallel to f; optional faces may stay unmatched
  std::vector<std::vector<int>> adj;  // s index -> f indices, deduplicated
  int edge_count() const;
};

/// Which pole faces join F.
enum class PoleRule {
  Conjunctive,  // incident to a sink and to a source; must be matched
  Disjunctive,  // incident to a sink or a source; must be matched
  Optional,     // incident to a sink or a source; matched at most once
};
const char* pole_rule_name(PoleRule r);

IncidenceGraph build_incidence(const NormalizedCGraph& n, const Orientation& o,
                               PoleRule rule = PoleRule::Disjunctive);

/// Hopcroft-Karp. Returns, per s index, the matched f index when every s and every
/// non-optional face is matched.
std::optional<std::vector<int>> perfect_matching(const IncidenceGraph& g);

enum class Status { CPlanar, NotCPlanar, Unsupported };
const char* status_name(Status s);

enum class Reason { None, WindingObstruction, LoopEnclosure, NoPerfectMatching, AllZeroWinding, TwoClusters };
const char* reason_name(Reason r);

struct ComponentStats {
  int vertices = 0;
  int edges = 0;
  int contractions = 0;
  int loops_deleted = 0;
  int subdivisions = 0;
  int subdivision_vertices = 0;
  int sinks_sources = 0;
  int matched_faces = 0;
  int elimination_chords = 0;
  int candidates = 0;
  int forest_chords = 0;
};

struct ComponentVerdict {
  Status status = Status::CPlanar;
  Reason reason = Reason::None;
  std::string detail;
  ComponentStats stats;
};

struct Verdict {
  Status status = Status::CPlanar;
  Reason reason = Reason::None;
  std::string detail;
  std::vector<ComponentVerdict> components;
  std::optional<Certificate> certificate;
};

struct DecideOptions {
  bool build_certificate = true;
  PoleRule pole_rule = PoleRule::Disjunctive;
};

/// Full pipeline on a raw instance. Throws Error only for malformed input.
Verdict decide(const CGraph& cg, const DecideOptions& opts = {});

}  // namespace cplanar
