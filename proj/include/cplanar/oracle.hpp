#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplanar/certificate.hpp"

namespace cplanar {

struct OracleLimits {
  int max_vertices = 14;
  long max_nodes = 2'000'000;
};

enum class OracleStatus { CPlanar, NotCPlanar, LimitExceeded };
const char* oracle_status_name(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::NotCPlanar;
  std::vector<ChordRequest> witness;  // chords on the faces of the input, traced fresh
  std::optional<Certificate> certificate;
  long nodes = 0;
  std::string detail;
};

/// Exhaustive search for non-crossing intra-cluster chords that connect every cluster
/// inside every component. Works on any labelled spherical map; dead slots are
/// compacted away first.
OracleResult oracle_decide(const CGraph& cg, const OracleLimits& limits = {});

/// Inserts a witness into a copy of the input and packages it as a certificate.
Certificate witness_certificate(const CGraph& cg, const std::vector<ChordRequest>& witness);

/// Dense copy of an instance with dead slots removed.
CGraph compact_instance(const CGraph& cg);

}  // namespace cplanar
