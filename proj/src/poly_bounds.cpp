#include "ekchain/poly_bounds.hpp"

#include "ekchain/error.hpp"
#include "ekchain/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ekchain {

CoefficientSequence::CoefficientSequence(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error(ErrorCode::EmptySequence, "coefficient sequence is empty");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const double a = coeffs_[k];
        if (!std::isfinite(a) || !(a > 0.0))
            throw Error(ErrorCode::NonPositiveCoefficient,
                        "coefficient at index " + std::to_string(k) +
                            " is not strictly positive and finite");
    }
}

double CoefficientSequence::sum() const noexcept
{
    return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0);
}

CoefficientSequence CoefficientSequence::reversed() const
{
    return CoefficientSequence(std::vector<double>(coeffs_.rbegin(), coeffs_.rend()));
}

CoefficientSequence CoefficientSequence::scaled(double factor) const
{
    std::vector<double> out(coeffs_);
    for (double& a : out)
        a *= factor;
    return CoefficientSequence(std::move(out));
}

std::string_view to_string(MonotonicityClass m) noexcept
{
    switch (m) {
    case MonotonicityClass::StrictlyIncreasing: return "StrictlyIncreasing";
    case MonotonicityClass::NonDecreasing: return "NonDecreasing";
    case MonotonicityClass::AllEqual: return "AllEqual";
    case MonotonicityClass::NonIncreasing: return "NonIncreasing";
    case MonotonicityClass::StrictlyDecreasing: return "StrictlyDecreasing";
    case MonotonicityClass::Mixed: return "Mixed";
    }
    return "Mixed";
}

bool is_non_decreasing(MonotonicityClass m) noexcept
{
    return m == MonotonicityClass::AllEqual || m == MonotonicityClass::NonDecreasing ||
           m == MonotonicityClass::StrictlyIncreasing;
}

bool is_non_increasing(MonotonicityClass m) noexcept
{
    return m == MonotonicityClass::AllEqual || m == MonotonicityClass::NonIncreasing ||
           m == MonotonicityClass::StrictlyDecreasing;
}

Annulus ek_annulus(const CoefficientSequence& c)
{
    if (c.degree() == 0)
        throw Error(ErrorCode::DegreeZero, "annulus needs degree >= 1");

    std::vector<double> ratios(c.degree());
    for (std::size_t k = 1; k <= c.degree(); ++k)
        ratios[k - 1] = c[k - 1] / c[k];

    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    return Annulus{*lo, *hi, *lo == *hi};
}

Complex eval_poly(const CoefficientSequence& c, Complex z)
{
    const auto a = c.coeffs();
    Complex acc{a.back(), 0.0};
    for (std::size_t k = a.size() - 1; k-- > 0;)
        acc = acc * z + a[k];
    return acc;
}

MonotonicityClass classify_monotonicity(const CoefficientSequence& c) noexcept
{
    bool non_decreasing = true;
    bool non_increasing = true;
    bool strictly_increasing = true;
    bool strictly_decreasing = true;
    const auto a = c.coeffs();
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (a[k] < a[k - 1])
            non_decreasing = false;
        if (a[k] > a[k - 1])
            non_increasing = false;
        if (!(a[k] > a[k - 1]))
            strictly_increasing = false;
        if (!(a[k] < a[k - 1]))
            strictly_decreasing = false;
    }
    if (non_decreasing && non_increasing)
        return MonotonicityClass::AllEqual;
    if (strictly_increasing)
        return MonotonicityClass::StrictlyIncreasing;
    if (strictly_decreasing)
        return MonotonicityClass::StrictlyDecreasing;
    if (non_decreasing)
        return MonotonicityClass::NonDecreasing;
    if (non_increasing)
        return MonotonicityClass::NonIncreasing;
    return MonotonicityClass::Mixed;
}

Complex geometric_sum_closed_form(int n, double theta)
{
    const Complex z = std::polar(1.0, theta);
    const Complex denom = 1.0 - z;
    if (std::abs(denom) < kAngleTolerance)
        throw Error(ErrorCode::AngleAtSingularity,
                    "e^{i theta} = 1 makes the closed form singular");
    const Complex zn1 = std::polar(1.0, static_cast<double>(n + 1) * theta);
    return (1.0 - zn1) / denom;
}

}  // namespace ekchain
