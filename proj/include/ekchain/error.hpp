#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ekchain {

enum class ErrorCode {
    EmptySequence,
    DegreeZero,
    NonPositiveCoefficient,
    AngleAtSingularity,
    CollinearPoints,
    DegenerateAngle,
    NotMonotone,
    DegenerateChain,
    WrongOrientation,
    RootOfUnityCase,
    NonvanishingFloor,
    EmptyChain,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ekchain
