#include "ekchain/geometry.hpp"

#include "ekchain/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ekchain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::string_view to_string(AngleClass c) noexcept
{
    switch (c) {
    case AngleClass::Zero: return "Zero";
    case AngleClass::Pi: return "Pi";
    case AngleClass::UpperHalf: return "UpperHalf";
    case AngleClass::LowerHalf: return "LowerHalf";
    }
    return "Zero";
}

Angle::Angle(double theta) noexcept : theta_(theta)
{
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // r + 2pi can round up to exactly 2pi for tiny negative inputs.
    if (r >= kTwoPi)
        r = 0.0;
    canonical_ = r;
}

double distance(Point2 p, Point2 q) noexcept
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

double collinearity_det(Point2 a, Point2 b, Point2 c) noexcept
{
    // Subtracting the first row from the others leaves the same determinant.
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Circle circumcircle(Point2 a, Point2 b, Point2 c)
{
    const double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x),
                                   std::abs(b.y), std::abs(c.x), std::abs(c.y)});
    const double det = collinearity_det(a, b, c);
    if (!(std::abs(det) > kGeomTolerance * scale * scale))
        throw Error(ErrorCode::CollinearPoints, "circumcircle of collinear points");

    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double d = 2.0 * det;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    return Circle{{a.x + ux, a.y + uy}, std::hypot(ux, uy)};
}

AngleClass classify_angle(const Angle& a) noexcept
{
    const double t = a.canonical();
    if (t < kAngleTolerance || kTwoPi - t < kAngleTolerance)
        return AngleClass::Zero;
    if (std::abs(t - std::numbers::pi) < kAngleTolerance)
        return AngleClass::Pi;
    return t < std::numbers::pi ? AngleClass::UpperHalf : AngleClass::LowerHalf;
}

}  // namespace ekchain
