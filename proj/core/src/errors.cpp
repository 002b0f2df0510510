#include "pedax/errors.hpp"

namespace pedax {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::InfiniteLine: return "InfiniteLine";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::CenterOfConic: return "CenterOfConic";
    case ErrorCode::InteriorPoint: return "InteriorPoint";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::ConcentricCircles: return "ConcentricCircles";
    case ErrorCode::DegeneratePedal: return "DegeneratePedal";
    case ErrorCode::InvalidPedal: return "InvalidPedal";
    case ErrorCode::OnSideline: return "OnSideline";
    case ErrorCode::SampleDegenerate: return "SampleDegenerate";
    case ErrorCode::DegenerateReflection: return "DegenerateReflection";
    case ErrorCode::NotOnCircumcircle: return "NotOnCircumcircle";
    case ErrorCode::NotOrthologic: return "NotOrthologic";
    case ErrorCode::DegenerateBisectorPedals: return "DegenerateBisectorPedals";
    case ErrorCode::UnknownCheckId: return "UnknownCheckId";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
  }
  return "GeomError";
}

GeomError::GeomError(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(error_name(code))
                                        : std::string(error_name(code)) + ": " + detail),
      code_(code) {}

void raise(ErrorCode code, const std::string& detail) { throw GeomError(code, detail); }

}  // namespace pedax
