#pragma once

#include <stdexcept>
#include <string>

namespace cplanar {

enum class Errc {
  MalformedRotation,
  NonSpherical,
  DisconnectedMapRequested,
  LoopContraction,
  OccurrenceNotOnFace,
  StaleFaceHandle,
  NotALoop,
  ReferenceOnBothSides,
  IllegalDelta,
  NotClosed,
  InternalNonDivisible,
  NonZeroHeightFace,
  NotCyclic,
  MissingInterClusterEdges,
  ClusterCountTooSmall,
  FaceAlreadyConforming,
  IntraClusterEdge,
  InternalInvariantViolation,
  LimitExceeded,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& message)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + message), kind_(kind) {}

  Errc kind() const noexcept { return kind_; }

 private:
  Errc kind_;
};

// Signals a broken pipeline invariant; inputs can never trigger it.
[[noreturn]] inline void invariant_violation(const std::string& what) {
  throw Error(Errc::InternalInvariantViolation, what);
}

}  // namespace cplanar
