#pragma once

#include "ekchain/poly_bounds.hpp"

#include <cstddef>
#include <vector>

namespace ekchain {

struct RootSet {
    std::vector<Complex> roots;     // with multiplicity, size == degree
    std::vector<double> residuals;  // |P(z)| / sum |a_k| |z|^k
    bool converged = false;
    int iterations = 0;
    bool relaxed = false;  // correction threshold was relaxed for clustered roots
};

inline constexpr int kMaxRootIterations = 200;
inline constexpr int kRelaxAfterIterations = 150;
inline constexpr double kCorrectionTolerance = 1e-14;
inline constexpr double kRelaxFactor = 100.0;
inline constexpr double kResidualTolerance = 1e-10;
inline constexpr int kPolishSteps = 3;

/// All zeros of the polynomial by Aberth–Ehrlich simultaneous iteration.
///
/// Starting points sit on the circle of radius sqrt(inner * outer) of the
/// Eneström–Kakeya annulus, equally spaced and rotated by a fixed phase. The
/// sweep updates roots in place (Gauss–Seidel order) and stops once every
/// relative correction drops below 1e-14, or after 200 sweeps. Past sweep 150
/// the threshold is relaxed by 100x so clustered roots can settle. Each root
/// then gets a few guarded Newton steps.
///
/// Never throws for valid input beyond DegreeZero; failure to converge is
/// reported through `converged`.
RootSet find_roots(const CoefficientSequence& c);

struct MembershipViolation {
    std::size_t index = 0;
    double modulus = 0.0;
    double margin = 0.0;  // negative: distance outside the allowed band
};

struct MembershipReport {
    bool passed = false;
    bool roots_converged = false;
    double min_margin = 0.0;
    std::vector<MembershipViolation> violations;
};

/// Closed-annulus membership: inner - tol*outer <= |z| <= outer*(1+tol). For a
/// degenerate annulus the band is ||z| - inner| <= tol*inner instead.
MembershipReport check_annulus_membership(const RootSet& roots, const Annulus& a, double tol);

}  // namespace ekchain
