#pragma once

#include "ekchain/geometry.hpp"
#include "ekchain/poly_bounds.hpp"

#include <string_view>
#include <vector>

namespace ekchain {

enum class Orientation { External, Internal };

std::string_view to_string(Orientation o) noexcept;

// Interlacing-circle chain for the partial sums of sum c_m e^{i m theta}.
//
// External chains (non-decreasing coefficients) have each circle containing
// its predecessor; internal chains (non-increasing) have each circle inside
// its predecessor. Consecutive circles touch at the shared partial sum.
struct ChainConstruction {
    Orientation orientation = Orientation::External;
    Angle theta;
    std::vector<Point2> sums;     // R_0..R_n (or Q_0..Q_n)
    std::vector<Point2> probes;   // S_1..S_n
    std::vector<Circle> circles;  // one per sum; empty when degenerate_axis
    std::vector<bool> coincident; // entry k-1: circle k equals circle k-1
    bool degenerate_axis = false; // theta in {0, pi}: everything lies on the X-axis

    std::size_t degree() const noexcept { return sums.empty() ? 0 : sums.size() - 1; }
};

struct VerificationReport {
    // |dist(C_k, C_{k-1}) - |r_k - r_{k-1}||, k = 1..n.
    std::vector<double> tangency_residuals;
    // Two entries per k = 1..n: R_{k-1} against circle k, then against circle k-1.
    std::vector<double> membership_residuals;
    // |dist(C_{k-1}, S_k) - r_{k-1}|, k = 1..n.
    std::vector<double> probe_residuals;
    // |det(R_{k-1}, C_{k-1}, C_k)|, k = 1..n.
    std::vector<double> collinearity_residuals;
    // How far circle k pokes out of (internal) or into (external) circle k-1;
    // zero when properly nested.
    std::vector<double> nesting_residuals;
    double nonvanishing_magnitude = 0.0;
    double nonvanishing_floor = 0.0;
    double scale = 0.0;  // largest radius
    double tolerance = 0.0;
    bool passed = false;
};

// Lower bound on |R_n| below which cancellation is indistinguishable from zero.
inline constexpr double kNonvanishingRelFloor = 1e-12;

struct NonvanishingWitness {
    Complex endpoint;
    double magnitude = 0.0;
    double floor = 0.0;   // kNonvanishingRelFloor * sum of coefficients
    double margin = 0.0;  // magnitude - floor, positive on success
};

// Running accumulation of sum_{m<=k} c_m e^{i m theta} for k = 0..n.
std::vector<Point2> accumulate_sums(const CoefficientSequence& c, const Angle& theta);

// S_k = sums[k-1] + c_{k-1} e^{i k theta}, k = 1..n.
std::vector<Point2> accumulate_probes(const CoefficientSequence& c, const Angle& theta,
                                      const std::vector<Point2>& sums);

}  // namespace ekchain

namespace ekchain {

// Sign checks for chains collapsed onto the X-axis (theta = 0 or pi).
struct AxisReport {
    double endpoint = 0.0;      // x-coordinate of the last partial sum
    int expected_sign = 0;      // +1 or -1
    double max_off_axis = 0.0;  // largest |y| among the sums
    bool passed = false;
};

// theta = 0: every sum is positive. theta = pi: the external endpoint is
// negative for odd n and positive for even n; the internal endpoint is positive.
int expected_axis_sign(Orientation o, std::size_t n, AngleClass c);

/// Throws DegenerateChain if the chain is not an axis chain.
AxisReport verify_axis_chain(const ChainConstruction& chain, double tol);

}  // namespace ekchain
