#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ekchain {

using Complex = std::complex<double>;

// Strictly positive coefficients a_0..a_n, constant term first.
class CoefficientSequence {
public:
    // Throws EmptySequence or NonPositiveCoefficient. The positivity check is
    // a strict `> 0` with no epsilon; non-finite values are rejected too.
    explicit CoefficientSequence(std::vector<double> coeffs);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    double operator[](std::size_t k) const noexcept { return coeffs_[k]; }
    double sum() const noexcept;

    CoefficientSequence reversed() const;
    CoefficientSequence scaled(double factor) const;

    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;

private:
    std::vector<double> coeffs_;
};

// Open modulus bounds on the zeros; degenerate when both bounds coincide.
struct Annulus {
    double inner = 0.0;
    double outer = 0.0;
    bool degenerate = false;

    friend bool operator==(const Annulus&, const Annulus&) = default;
};

enum class MonotonicityClass {
    StrictlyIncreasing,
    NonDecreasing,
    AllEqual,
    NonIncreasing,
    StrictlyDecreasing,
    Mixed,
};

std::string_view to_string(MonotonicityClass m) noexcept;

// True for AllEqual, NonDecreasing and StrictlyIncreasing.
bool is_non_decreasing(MonotonicityClass m) noexcept;
// True for AllEqual, NonIncreasing and StrictlyDecreasing.
bool is_non_increasing(MonotonicityClass m) noexcept;

/// Eneström–Kakeya annulus: min and max of the consecutive ratios a_{k-1}/a_k.
/// Throws DegreeZero for constant polynomials.
Annulus ek_annulus(const CoefficientSequence& c);

/// Horner evaluation of sum a_k z^k.
Complex eval_poly(const CoefficientSequence& c, Complex z);

MonotonicityClass classify_monotonicity(const CoefficientSequence& c) noexcept;

/// (1 - z^{n+1}) / (1 - z) with z = e^{i theta}. Throws AngleAtSingularity
/// when |1 - z| is below the angle tolerance.
Complex geometric_sum_closed_form(int n, double theta);

}  // namespace ekchain
