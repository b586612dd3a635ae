#include "ekchain/root_oracle.hpp"

#include "ekchain/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ekchain {

namespace {

// Phase offset of the starting points; an irrational multiple of pi keeps
// them off the symmetry axes of real polynomials.
constexpr double kStartPhase = std::numbers::sqrt2 / 4.0;

struct HornerResult {
    Complex value;
    Complex derivative;
};

HornerResult horner_with_derivative(std::span<const double> a, Complex z)
{
    Complex p{a.back(), 0.0};
    Complex dp{0.0, 0.0};
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
    return {p, dp};
}

double scaled_residual(std::span<const double> a, Complex z)
{
    const double m = std::abs(z);
    double scale = 0.0;
    for (std::size_t k = a.size(); k-- > 0;)
        scale = scale * m + a[k];
    return std::abs(horner_with_derivative(a, z).value) / scale;
}

double start_radius(const CoefficientSequence& c)
{
    const Annulus ann = ek_annulus(c);
    const double r = std::sqrt(ann.inner * ann.outer);
    if (std::isfinite(r) && r > 0.0)
        return r;
    // Cauchy bound.
    const auto a = c.coeffs();
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        worst = std::max(worst, a[k] / a.back());
    return 1.0 + worst;
}

}  // namespace

RootSet find_roots(const CoefficientSequence& c)
{
    if (c.degree() == 0)
        throw Error(ErrorCode::DegreeZero, "a constant polynomial has no roots");

    const auto a = c.coeffs();
    const std::size_t n = c.degree();
    const double radius = start_radius(c);

    RootSet out;
    out.roots.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phase =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + kStartPhase;
        out.roots[k] = std::polar(radius, phase);
    }

    auto& z = out.roots;
    bool settled = false;
    for (int iter = 1; iter <= kMaxRootIterations && !settled; ++iter) {
        out.iterations = iter;
        if (iter > kRelaxAfterIterations)
            out.relaxed = true;
        const double threshold = kCorrectionTolerance * (out.relaxed ? kRelaxFactor : 1.0);

        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto [p, dp] = horner_with_derivative(a, z[k]);
            if (p == Complex{})
                continue;
            Complex correction;
            if (dp == Complex{}) {
                // Stationary point: nudge off it deterministically.
                correction = z[k] * Complex{0.0, 1e-3};
            } else {
                const Complex newton = p / dp;
                Complex repulsion{};
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k)
                        repulsion += 1.0 / (z[k] - z[j]);
                correction = newton / (1.0 - newton * repulsion);
            }
            if (!std::isfinite(correction.real()) || !std::isfinite(correction.imag()))
                continue;
            z[k] -= correction;
            worst = std::max(worst, std::abs(correction) /
                                        std::max(std::abs(z[k]),
                                                 std::numeric_limits<double>::min()));
        }
        settled = worst < threshold;
    }

    out.residuals.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double best = scaled_residual(a, z[k]);
        for (int step = 0; step < kPolishSteps; ++step) {
            const auto [p, dp] = horner_with_derivative(a, z[k]);
            if (dp == Complex{})
                break;
            const Complex candidate = z[k] - p / dp;
            const double res = scaled_residual(a, candidate);
            if (!(res < best))
                break;
            z[k] = candidate;
            best = res;
        }
        out.residuals[k] = best;
    }

    out.converged = settled && std::all_of(out.residuals.begin(), out.residuals.end(),
                                           [](double r) { return r < kResidualTolerance; });
    return out;
}

MembershipReport check_annulus_membership(const RootSet& roots, const Annulus& a, double tol)
{
    MembershipReport rep;
    rep.roots_converged = roots.converged;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < roots.roots.size(); ++k) {
        const double m = std::abs(roots.roots[k]);
        double margin;
        if (a.degenerate)
            margin = tol * a.inner - std::abs(m - a.inner);
        else
            margin = std::min(m - (a.inner - tol * a.outer), a.outer * (1.0 + tol) - m);
        rep.min_margin = std::min(rep.min_margin, margin);
        if (margin < 0.0)
            rep.violations.push_back({k, m, margin});
    }
    rep.passed = rep.violations.empty();
    return rep;
}

}  // namespace ekchain
