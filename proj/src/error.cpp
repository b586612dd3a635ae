#include "ekchain/error.hpp"

namespace ekchain {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptySequence: return "empty coefficient sequence";
    case ErrorCode::DegreeZero: return "degree zero";
    case ErrorCode::NonPositiveCoefficient: return "non-positive coefficient";
    case ErrorCode::AngleAtSingularity: return "angle at singularity";
    case ErrorCode::CollinearPoints: return "collinear points";
    case ErrorCode::DegenerateAngle: return "degenerate angle";
    case ErrorCode::NotMonotone: return "not monotone";
    case ErrorCode::DegenerateChain: return "degenerate chain";
    case ErrorCode::WrongOrientation: return "wrong orientation";
    case ErrorCode::RootOfUnityCase: return "root-of-unity case";
    case ErrorCode::NonvanishingFloor: return "below nonvanishing floor";
    case ErrorCode::EmptyChain: return "empty chain";
    }
    return "unknown error";
}

}  // namespace ekchain
