#pragma once

#include <stdexcept>
#include <string>

namespace pedax {

enum class ErrorCode {
  NonFinite,
  ZeroTriple,
  CoincidentPoints,
  CoincidentLines,
  NotCollinear,
  DegenerateQuadruple,
  PointAtInfinity,
  InfiniteLine,
  IllConditioned,
  DegenerateConic,
  CenterOfConic,
  InteriorPoint,
  CollinearPoints,
  ConcentricCircles,
  DegeneratePedal,
  InvalidPedal,
  OnSideline,
  SampleDegenerate,
  DegenerateReflection,
  NotOnCircumcircle,
  NotOrthologic,
  DegenerateBisectorPedals,
  UnknownCheckId,
  SamplingFailed,
};

/// Stable token for an error code, e.g. "ConcentricCircles". The CLI prints
/// this on stderr, so scripts and tests can match the exact spelling.
const char* error_name(ErrorCode code);

class GeomError : public std::runtime_error {
 public:
  GeomError(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail = "");

}  // namespace pedax
