#pragma once

#include "ekchain/chain.hpp"

#include <cmath>

namespace ekchain::detail {

VerificationReport verify_interlacing(const ChainConstruction& chain, double tol);

// Shared nonvanishing check; the caller has already validated monotonicity.
NonvanishingWitness witness_endpoint(const CoefficientSequence& c, const Angle& theta);

// e^{im theta}, corrected for the rounding of the product m * theta.
inline Point2 unit_phase(std::size_t m, double theta)
{
    const double mm = static_cast<double>(m);
    const double phase = mm * theta;
    const double lost = std::fma(mm, theta, -phase);
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    return {c - s * lost, s + c * lost};
}

inline double csc_half(const Angle& theta) { return 1.0 / std::sin(0.5 * theta.canonical()); }
inline double cot_half(const Angle& theta) { return 1.0 / std::tan(0.5 * theta.canonical()); }

}  // namespace ekchain::detail
