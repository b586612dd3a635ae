#include "ekchain/chain_tomic.hpp"

#include "chain_internal.hpp"
#include "ekchain/error.hpp"

#include <cmath>
#include <stdexcept>

namespace ekchain {

namespace {

// Circle through `from` and `to` whose chord subtends theta at the centre.
Circle circle_on_chord(Point2 from, Point2 to, double qk, const Angle& theta)
{
    const double cot = detail::cot_half(theta);
    const double du = to.x - from.x;
    const double dv = to.y - from.y;
    return Circle{{0.5 * (from.x + to.x) - 0.5 * dv * cot, 0.5 * (from.y + to.y) + 0.5 * du * cot},
                  0.5 * qk * detail::csc_half(theta)};
}

}  // namespace

std::vector<Point2> partial_sums_q(const CoefficientSequence& q, const Angle& theta)
{
    return accumulate_sums(q, theta);
}

Circle tomic_circle(const CoefficientSequence& q, const Angle& theta, std::size_t k)
{
    if (is_axis_angle(theta))
        throw Error(ErrorCode::DegenerateAngle, "theta is a multiple of pi");
    if (k > q.degree())
        throw std::out_of_range("circle index exceeds degree");
    const auto sums = accumulate_sums(q, theta);
    const Point2 from = k == 0 ? Point2{} : sums[k - 1];
    return circle_on_chord(from, sums[k], q[k], theta);
}

ChainConstruction build_chain_internal(const CoefficientSequence& q, const Angle& theta)
{
    if (!is_non_increasing(classify_monotonicity(q)))
        throw Error(ErrorCode::NotMonotone, "internal chain needs non-increasing coefficients");

    ChainConstruction chain;
    chain.orientation = Orientation::Internal;
    chain.theta = theta;
    chain.sums = accumulate_sums(q, theta);
    chain.probes = accumulate_probes(q, theta, chain.sums);
    for (std::size_t k = 1; k < q.size(); ++k)
        chain.coincident.push_back(q[k - 1] == q[k]);
    chain.degenerate_axis = is_axis_angle(theta);
    if (chain.degenerate_axis)
        return chain;

    chain.circles.reserve(q.size());
    chain.circles.push_back(circle_on_chord(Point2{}, chain.sums[0], q[0], theta));
    for (std::size_t k = 1; k < q.size(); ++k) {
        if (chain.coincident[k - 1])
            chain.circles.push_back(chain.circles.back());
        else
            chain.circles.push_back(
                circle_on_chord(chain.sums[k - 1], chain.sums[k], q[k], theta));
    }
    return chain;
}

ReversalResult reversal_transform(const CoefficientSequence& q, const Angle& theta)
{
    const double n = static_cast<double>(q.degree());
    return ReversalResult{q.reversed(), Angle(-theta.canonical()),
                          std::polar(1.0, -n * theta.canonical())};
}

VerificationReport verify_chain_internal(const ChainConstruction& chain, double tol)
{
    if (chain.orientation != Orientation::Internal)
        throw Error(ErrorCode::WrongOrientation,
                    "verify_chain_internal expects an internal chain");
    return detail::verify_interlacing(chain, tol);
}

NonvanishingWitness nonvanishing_witness_internal(const CoefficientSequence& q,
                                                  const Angle& theta)
{
    if (!is_non_increasing(classify_monotonicity(q)))
        throw Error(ErrorCode::NotMonotone, "the nonvanishing witness needs non-increasing coefficients");
    return detail::witness_endpoint(q, theta);
}

}  // namespace ekchain
