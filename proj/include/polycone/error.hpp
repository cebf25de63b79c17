#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycone {

enum class ErrorCode {
  DimensionMismatch,
  InfeasiblePoint,
  EmptyPolyhedron,
  NoVertices,
  NotAVertex,
  NotAttained,
  NoVertexPath,
  TooFewSamples,
  ParallelPair,
  OffsetDiverges,
  OffsetOscillates,
  BadWindow,
  TrackNotConverged,
  MaxNotAttained,
  InvalidArgument,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; the CLI maps codes to exit
/// statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polycone
