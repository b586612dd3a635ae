#pragma once

#include "ekchain/chain.hpp"

#include <vector>

namespace ekchain {

std::vector<Point2> partial_sums_q(const CoefficientSequence& q, const Angle& theta);

/// Circle k of the internal chain, built from the chord Q_{k-1}Q_k: centre is
/// the chord midpoint pushed along its normal by (half chord) * cot(theta/2).
Circle tomic_circle(const CoefficientSequence& q, const Angle& theta, std::size_t k);

/// Throws NotMonotone unless q is non-increasing.
ChainConstruction build_chain_internal(const CoefficientSequence& q, const Angle& theta);

struct ReversalResult {
    CoefficientSequence reversed;
    Angle angle;    // -theta, canonicalised
    Complex phase;  // e^{-i n theta}
};

// For non-increasing q the reversed sequence is non-decreasing and its
// endpoint at -theta equals phase * Q_n.
ReversalResult reversal_transform(const CoefficientSequence& q, const Angle& theta);

VerificationReport verify_chain_internal(const ChainConstruction& chain, double tol);

NonvanishingWitness nonvanishing_witness_internal(const CoefficientSequence& q,
                                                  const Angle& theta);

}  // namespace ekchain
