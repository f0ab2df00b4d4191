#pragma once

#include <cstdint>
#include <random>

#include "cplanar/cmodel.hpp"

namespace cplanar {

struct GenOptions {
  int n = 3;               // target vertex count, at least c
  int c = 3;
  std::uint64_t seed = 0;
  int ops = -1;            // extra edge-only insertions; -1 picks n / 4
  double keep_winding = 0.5;  // probability that an insertion keeps all inner windings zero
  int max_path = 4;        // longest inserted path, in internal vertices
  bool intra = true;       // allow intra-cluster edges (zero steps)
};

/// Grows an embedded cyclic instance from the winding c-cycle by inserting pendant
/// vertices and paths inside faces. Deterministic per seed on every platform.
CGraph generate(const GenOptions& opt);

/// Random connected subgraph of a concentric grid drawn as a fan: ring i, position j
/// lies in the wedge of cluster j / m. Rings 0 and R-1 are kept whole so both poles
/// wind once, and at most one pendant hangs off each outer-ring vertex. Every output
/// is c-planar by construction. Needs n >= 2c.
CGraph generate_fan(const GenOptions& opt);

/// Uniform integer in [0, bound) from a 64-bit engine, independent of the standard
/// library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace cplanar
