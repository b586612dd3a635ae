#pragma once

#include "ekchain/chain.hpp"

#include <vector>

namespace ekchain {

std::vector<Point2> partial_sums(const CoefficientSequence& p, const Angle& theta);

std::vector<Point2> probe_points(const CoefficientSequence& p, const Angle& theta);

/// Circle k of the external chain: radius (p_k/2) csc(theta/2), centre
/// R_{k-1} + (p_k/2) e^{ik theta} (1 + i cot(theta/2)) with R_{-1} = O.
/// Throws DegenerateAngle for theta in {0, pi}; std::out_of_range for k > n.
Circle kakeya_circle(const CoefficientSequence& p, const Angle& theta, std::size_t k);

/// Throws NotMonotone unless p is non-decreasing.
ChainConstruction build_chain(const CoefficientSequence& p, const Angle& theta);

/// Throws DegenerateChain for axis chains and WrongOrientation for internal ones.
VerificationReport verify_chain(const ChainConstruction& chain, double tol);

/// |R_n| with its floor. Throws NotMonotone, RootOfUnityCase (all-equal
/// coefficients at a nontrivial (n+1)-st root of unity) or NonvanishingFloor.
NonvanishingWitness nonvanishing_witness(const CoefficientSequence& p, const Angle& theta);

}  // namespace ekchain
