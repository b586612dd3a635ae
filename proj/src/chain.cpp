#include "ekchain/chain.hpp"

#include "chain_internal.hpp"
#include "ekchain/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ekchain {

std::string_view to_string(Orientation o) noexcept
{
    return o == Orientation::External ? "external" : "internal";
}

namespace {

// Neumaier compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

}  // namespace

std::vector<Point2> accumulate_sums(const CoefficientSequence& c, const Angle& theta)
{
    const double t = theta.canonical();
    std::vector<Point2> sums;
    sums.reserve(c.size());
    CompensatedSum x, y;
    for (std::size_t m = 0; m < c.size(); ++m) {
        const Point2 u = detail::unit_phase(m, t);
        x.add(c[m] * u.x);
        y.add(c[m] * u.y);
        sums.push_back({x.value(), y.value()});
    }
    return sums;
}

std::vector<Point2> accumulate_probes(const CoefficientSequence& c, const Angle& theta,
                                      const std::vector<Point2>& sums)
{
    const double t = theta.canonical();
    std::vector<Point2> probes;
    probes.reserve(c.degree());
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (c[k - 1] == c[k]) {
            probes.push_back(sums[k]);
            continue;
        }
        const Point2 u = detail::unit_phase(k, t);
        probes.push_back({sums[k - 1].x + c[k - 1] * u.x, sums[k - 1].y + c[k - 1] * u.y});
    }
    return probes;
}

namespace detail {

VerificationReport verify_interlacing(const ChainConstruction& chain, double tol)
{
    if (chain.degenerate_axis)
        throw Error(ErrorCode::DegenerateChain,
                    "axis chains carry no circles; use the sign rules instead");

    VerificationReport rep;
    rep.tolerance = tol;
    const std::size_t n = chain.degree();
    const auto& C = chain.circles;
    const auto& R = chain.sums;
    const auto& S = chain.probes;
    const bool external = chain.orientation == Orientation::External;

    for (const Circle& c : C)
        rep.scale = std::max(rep.scale, c.radius);

    for (std::size_t k = 1; k <= n; ++k) {
        const Circle& prev = C[k - 1];
        const Circle& cur = C[k];
        const double gap = distance(cur.center, prev.center);
        if (chain.coincident[k - 1]) {
            rep.tangency_residuals.push_back(0.0);
            rep.collinearity_residuals.push_back(0.0);
            rep.nesting_residuals.push_back(0.0);
        } else {
            rep.tangency_residuals.push_back(std::abs(gap - std::abs(cur.radius - prev.radius)));
            rep.collinearity_residuals.push_back(
                std::abs(collinearity_det(R[k - 1], prev.center, cur.center)));
            const double poke = external ? gap + prev.radius - cur.radius
                                         : gap + cur.radius - prev.radius;
            rep.nesting_residuals.push_back(std::max(0.0, poke));
        }
        rep.membership_residuals.push_back(std::abs(distance(cur.center, R[k - 1]) - cur.radius));
        rep.membership_residuals.push_back(
            std::abs(distance(prev.center, R[k - 1]) - prev.radius));
        rep.probe_residuals.push_back(std::abs(distance(prev.center, S[k - 1]) - prev.radius));
    }

    // Coefficients are recovered as step lengths |R_k - R_{k-1}|.
    double coeff_sum = std::hypot(R[0].x, R[0].y);
    for (std::size_t k = 1; k <= n; ++k)
        coeff_sum += distance(R[k], R[k - 1]);
    rep.nonvanishing_magnitude = std::hypot(R[n].x, R[n].y);
    rep.nonvanishing_floor = kNonvanishingRelFloor * coeff_sum;

    const double lin = tol * rep.scale;
    const double quad = tol * rep.scale * rep.scale;
    const auto all_below = [](const std::vector<double>& v, double bound) {
        return std::all_of(v.begin(), v.end(), [bound](double r) { return r < bound; });
    };
    rep.passed = all_below(rep.tangency_residuals, lin) &&
                 all_below(rep.membership_residuals, lin) &&
                 all_below(rep.probe_residuals, lin) &&
                 all_below(rep.nesting_residuals, lin) &&
                 all_below(rep.collinearity_residuals, quad) &&
                 rep.nonvanishing_magnitude > rep.nonvanishing_floor;
    return rep;
}

namespace {

bool at_nontrivial_root_of_unity(std::size_t n, const Angle& theta)
{
    if (classify_angle(theta) == AngleClass::Zero)
        return false;
    const double order = static_cast<double>(n + 1);
    const double step = 2.0 * std::numbers::pi / order;
    const double j = std::round(theta.canonical() / step);
    return std::abs(theta.canonical() - j * step) < kAngleTolerance * order;
}

}  // namespace

NonvanishingWitness witness_endpoint(const CoefficientSequence& c, const Angle& theta)
{
    const bool all_equal = classify_monotonicity(c) == MonotonicityClass::AllEqual;
    if (all_equal && c.degree() > 0 && at_nontrivial_root_of_unity(c.degree(), theta))
        throw Error(ErrorCode::RootOfUnityCase,
                    "equal coefficients at a root of unity: the sum vanishes");

    const Point2 end = accumulate_sums(c, theta).back();
    NonvanishingWitness w;
    w.endpoint = Complex{end.x, end.y};
    w.magnitude = std::abs(w.endpoint);
    w.floor = kNonvanishingRelFloor * c.sum();
    w.margin = w.magnitude - w.floor;
    if (!(w.magnitude > w.floor)) {
        if (all_equal)
            throw Error(ErrorCode::RootOfUnityCase,
                        "equal coefficients at a root of unity: the sum vanishes");
        throw Error(ErrorCode::NonvanishingFloor,
                    "|R_n| is below the cancellation floor");
    }
    return w;
}

}  // namespace detail

}  // namespace ekchain

namespace ekchain {

int expected_axis_sign(Orientation o, std::size_t n, AngleClass c)
{
    if (c == AngleClass::Pi && o == Orientation::External && n % 2 == 1)
        return -1;
    return 1;
}

AxisReport verify_axis_chain(const ChainConstruction& chain, double tol)
{
    if (!chain.degenerate_axis)
        throw Error(ErrorCode::DegenerateChain, "sign rules apply only to axis chains");
    if (chain.sums.empty())
        throw Error(ErrorCode::EmptyChain, "chain has no partial sums");

    AxisReport rep;
    const Point2 end = chain.sums.back();
    rep.endpoint = end.x;
    rep.expected_sign = expected_axis_sign(chain.orientation, chain.degree(),
                                           classify_angle(chain.theta));
    double scale = 0.0;
    for (Point2 p : chain.sums) {
        rep.max_off_axis = std::max(rep.max_off_axis, std::abs(p.y));
        scale = std::max(scale, std::abs(p.x));
    }
    rep.passed = rep.endpoint * rep.expected_sign > 0.0 && rep.max_off_axis <= tol * scale;
    return rep;
}

}  // namespace ekchain
