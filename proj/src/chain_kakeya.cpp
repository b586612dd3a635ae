#include "ekchain/chain_kakeya.hpp"

#include "chain_internal.hpp"
#include "ekchain/error.hpp"

#include <cmath>
#include <stdexcept>

namespace ekchain {

namespace {

// Centre offset from R_{k-1}: (p_k/2) e^{ik theta} (1 + i cot(theta/2)).
Circle circle_from_anchor(Point2 anchor, double pk, std::size_t k, const Angle& theta)
{
    const double half = 0.5 * pk;
    const double cot = detail::cot_half(theta);
    const Point2 u = detail::unit_phase(k, theta.canonical());
    const double c = u.x;
    const double s = u.y;
    return Circle{{anchor.x + half * c - half * s * cot, anchor.y + half * s + half * c * cot},
                  half * detail::csc_half(theta)};
}

void require_non_degenerate(const Angle& theta)
{
    if (is_axis_angle(theta))
        throw Error(ErrorCode::DegenerateAngle, "theta is a multiple of pi");
}

}  // namespace

std::vector<Point2> partial_sums(const CoefficientSequence& p, const Angle& theta)
{
    return accumulate_sums(p, theta);
}

std::vector<Point2> probe_points(const CoefficientSequence& p, const Angle& theta)
{
    return accumulate_probes(p, theta, accumulate_sums(p, theta));
}

Circle kakeya_circle(const CoefficientSequence& p, const Angle& theta, std::size_t k)
{
    require_non_degenerate(theta);
    if (k > p.degree())
        throw std::out_of_range("circle index exceeds degree");
    const Point2 anchor = k == 0 ? Point2{} : accumulate_sums(p, theta)[k - 1];
    return circle_from_anchor(anchor, p[k], k, theta);
}

ChainConstruction build_chain(const CoefficientSequence& p, const Angle& theta)
{
    if (!is_non_decreasing(classify_monotonicity(p)))
        throw Error(ErrorCode::NotMonotone, "external chain needs non-decreasing coefficients");

    ChainConstruction chain;
    chain.orientation = Orientation::External;
    chain.theta = theta;
    chain.sums = accumulate_sums(p, theta);
    chain.probes = accumulate_probes(p, theta, chain.sums);
    for (std::size_t k = 1; k < p.size(); ++k)
        chain.coincident.push_back(p[k - 1] == p[k]);
    chain.degenerate_axis = is_axis_angle(theta);
    if (chain.degenerate_axis)
        return chain;

    chain.circles.reserve(p.size());
    chain.circles.push_back(circle_from_anchor(Point2{}, p[0], 0, theta));
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (chain.coincident[k - 1])
            chain.circles.push_back(chain.circles.back());
        else
            chain.circles.push_back(circle_from_anchor(chain.sums[k - 1], p[k], k, theta));
    }
    return chain;
}

VerificationReport verify_chain(const ChainConstruction& chain, double tol)
{
    if (chain.orientation != Orientation::External)
        throw Error(ErrorCode::WrongOrientation, "verify_chain expects an external chain");
    return detail::verify_interlacing(chain, tol);
}

NonvanishingWitness nonvanishing_witness(const CoefficientSequence& p, const Angle& theta)
{
    if (!is_non_decreasing(classify_monotonicity(p)))
        throw Error(ErrorCode::NotMonotone, "the nonvanishing witness needs non-decreasing coefficients");
    return detail::witness_endpoint(p, theta);
}

}  // namespace ekchain
