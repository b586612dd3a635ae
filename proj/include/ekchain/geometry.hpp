#pragma once

#include <string_view>

namespace ekchain {

// Relative tolerance for geometric predicates (scaled by the inputs' magnitude).
inline constexpr double kGeomTolerance = 1e-12;
// Absolute tolerance for angle classification at 0 and pi.
inline constexpr double kAngleTolerance = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Circle {
    Point2 center;
    double radius = 0.0;

    friend bool operator==(const Circle&, const Circle&) = default;
};

enum class AngleClass { Zero, Pi, UpperHalf, LowerHalf };

std::string_view to_string(AngleClass c) noexcept;

// An angle in radians together with its floored-modulo representative in [0, 2pi).
class Angle {
public:
    explicit Angle(double theta = 0.0) noexcept;

    double theta() const noexcept { return theta_; }
    double canonical() const noexcept { return canonical_; }

private:
    double theta_;
    double canonical_;
};

double distance(Point2 p, Point2 q) noexcept;

// Signed 3x3 determinant with rows (x, y, 1); positive for counter-clockwise a, b, c.
double collinearity_det(Point2 a, Point2 b, Point2 c) noexcept;

// Throws CollinearPoints when |det| <= kGeomTolerance * scale^2, scale being
// the largest coordinate magnitude among the inputs.
Circle circumcircle(Point2 a, Point2 b, Point2 c);

AngleClass classify_angle(const Angle& a) noexcept;

inline bool is_axis_angle(const Angle& a) noexcept
{
    const AngleClass c = classify_angle(a);
    return c == AngleClass::Zero || c == AngleClass::Pi;
}

}  // namespace ekchain
