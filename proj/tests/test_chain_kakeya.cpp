#include "ekchain/chain_kakeya.hpp"
#include "ekchain/error.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace ekchain;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

void expect_point(Point2 p, double x, double y, double tol = 1e-11)
{
    EXPECT_NEAR(p.x, x, tol);
    EXPECT_NEAR(p.y, y, tol);
}

void expect_circle(const Circle& c, double x, double y, double r, double tol = 1e-9)
{
    EXPECT_NEAR(c.center.x, x, tol);
    EXPECT_NEAR(c.center.y, y, tol);
    EXPECT_NEAR(c.radius, r, tol);
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected ekchain::Error";
    return ErrorCode::EmptyChain;
}

double max_of(const std::vector<double>& v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

TEST(PartialSums, ReferenceValues)
{
    const auto single = partial_sums(CoefficientSequence({1.0}), Angle(0.7));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], (Point2{1.0, 0.0}));

    const auto two = partial_sums(CoefficientSequence({1, 2}), Angle(kPi / 3));
    EXPECT_EQ(two[0], (Point2{1.0, 0.0}));
    expect_point(two[1], 2.0, 1.73205080757);

    const auto three = partial_sums(CoefficientSequence({1, 2, 3}), Angle(kPi / 3));
    expect_point(three[2], 0.5, 4.33012701892);
}

TEST(PartialSums, EndpointMatchesDirectSummation)
{
    oracle::Corpus corpus(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = corpus.non_decreasing(corpus.size(1, 51));
        const double theta = corpus.uniform(-10.0, 10.0);
        const auto sums = partial_sums(CoefficientSequence(c), Angle(theta));
        const auto ref = oracle::direct_sum(c, Angle(theta).canonical(), c.size() - 1);
        const double mag = static_cast<double>(std::abs(ref)) + 1.0;
        EXPECT_NEAR(sums.back().x, static_cast<double>(ref.real()), 1e-12 * mag * c.size());
        EXPECT_NEAR(sums.back().y, static_cast<double>(ref.imag()), 1e-12 * mag * c.size());
    }
}

TEST(PartialSums, ConjugationSymmetry)
{
    oracle::Corpus corpus(32);
    for (int trial = 0; trial < 200; ++trial) {
        const CoefficientSequence c(corpus.non_decreasing(corpus.size(1, 40)));
        const double theta = corpus.uniform(0.001, kPi - 0.001);
        const auto up = partial_sums(c, Angle(theta));
        const auto down = partial_sums(c, Angle(2.0 * kPi - theta));
        for (std::size_t k = 0; k < up.size(); ++k) {
            const double tol = 1e-12 * c.sum();
            EXPECT_NEAR(up[k].x, down[k].x, tol);
            EXPECT_NEAR(up[k].y, -down[k].y, tol);
        }
    }
}

TEST(ProbePoints, ReferenceValues)
{
    const auto s1 = probe_points(CoefficientSequence({1, 2}), Angle(kPi / 3));
    ASSERT_EQ(s1.size(), 1u);
    expect_point(s1[0], 1.5, 0.86602540378);

    const auto s2 = probe_points(CoefficientSequence({1, 2, 3}), Angle(kPi / 3));
    ASSERT_EQ(s2.size(), 2u);
    expect_point(s2[1], 1.0, 2.0 * kSqrt3, 1e-14);
}

TEST(ProbePoints, EqualCoefficientsCoincideWithSums)
{
    const CoefficientSequence c({2.5, 2.5, 2.5, 2.5});
    const Angle theta(1.1);
    const auto sums = partial_sums(c, theta);
    const auto probes = probe_points(c, theta);
    for (std::size_t k = 1; k < sums.size(); ++k)
        EXPECT_EQ(probes[k - 1], sums[k]);
}

TEST(KakeyaCircle, ReferenceValues)
{
    expect_circle(kakeya_circle(CoefficientSequence({1, 2, 3}), Angle(kPi / 3), 0), 0.5,
                  0.86602540378, 1.0);
    expect_circle(kakeya_circle(CoefficientSequence({1, 2, 3}), Angle(kPi / 3), 2), -1.0,
                  1.73205080757, 3.0);
    expect_circle(kakeya_circle(CoefficientSequence({1, 2, 3}), Angle(kPi / 2), 2), -0.5, 0.5,
                  2.12132034356);
    // p = (1, 1.5).
    expect_circle(kakeya_circle(CoefficientSequence({1, 1.5}), Angle(kPi / 3), 1), 0.25,
                  1.29903810568, 1.5);
}

TEST(KakeyaCircle, SpecialCaseClosedForms)
{
    oracle::Corpus corpus(33);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = corpus.non_decreasing(2);
        const double theta = corpus.uniform(0.01, kPi - 0.01);
        const CoefficientSequence p(c);
        const double cot = 1.0 / std::tan(theta / 2);
        const double csc = 1.0 / std::sin(theta / 2);
        // C_0 = (p0/2, p0/2 cot), C_1 = (p0 - p1/2, p1/2 cot).
        expect_circle(kakeya_circle(p, Angle(theta), 0), c[0] / 2, c[0] / 2 * cot, c[0] / 2 * csc,
                      1e-11 * csc * 10);
        expect_circle(kakeya_circle(p, Angle(theta), 1), c[0] - c[1] / 2, c[1] / 2 * cot,
                      c[1] / 2 * csc, 1e-11 * csc * 10);
    }
}

TEST(KakeyaCircle, MatchesCircumcircleOracle)
{
    oracle::Corpus corpus(34);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = corpus.non_decreasing(corpus.size(1, 20));
        const double theta = corpus.uniform(0.05, 2.0 * kPi - 0.05);
        if (std::abs(theta - kPi) < 0.05)
            continue;
        const CoefficientSequence p(c);
        const Angle a(theta);
        for (std::size_t k = 0; k <= p.degree(); ++k) {
            const Circle got = kakeya_circle(p, a, k);
            const auto ref = oracle::chain_circle(c, a.canonical(), k);
            const double tol = 1e-10 * static_cast<double>(ref.radius + 1.0) * 10;
            EXPECT_NEAR(got.center.x, static_cast<double>(ref.center.x), tol);
            EXPECT_NEAR(got.center.y, static_cast<double>(ref.center.y), tol);
            EXPECT_NEAR(got.radius, static_cast<double>(ref.radius), tol);
        }
    }
}

TEST(KakeyaCircle, Errors)
{
    const CoefficientSequence p({1, 2, 3});
    EXPECT_EQ(code_of([&] { kakeya_circle(p, Angle(0.0), 0); }), ErrorCode::DegenerateAngle);
    EXPECT_EQ(code_of([&] { kakeya_circle(p, Angle(kPi), 1); }), ErrorCode::DegenerateAngle);
    EXPECT_THROW(kakeya_circle(p, Angle(1.0), 3), std::out_of_range);
}

TEST(BuildChain, ThirdOfPi)
{
    const ChainConstruction chain = build_chain(CoefficientSequence({1, 2, 3}), Angle(kPi / 3));
    EXPECT_EQ(chain.orientation, Orientation::External);
    EXPECT_FALSE(chain.degenerate_axis);
    ASSERT_EQ(chain.sums.size(), 3u);
    ASSERT_EQ(chain.probes.size(), 2u);
    ASSERT_EQ(chain.circles.size(), 3u);
    expect_circle(chain.circles[0], 0.5, 0.86602540378, 1.0);
    expect_circle(chain.circles[1], 0.0, 1.73205080757, 2.0);
    expect_circle(chain.circles[2], -1.0, 1.73205080757, 3.0);
    EXPECT_EQ(chain.coincident, (std::vector<bool>{false, false}));
    EXPECT_EQ(chain.sums[0], (Point2{1.0, 0.0}));
}

TEST(BuildChain, CoincidentCirclesAreIdentical)
{
    const ChainConstruction chain = build_chain(CoefficientSequence({1, 2, 2}), Angle(kPi / 3));
    EXPECT_EQ(chain.coincident, (std::vector<bool>{false, true}));
    EXPECT_EQ(chain.circles[1], chain.circles[2]);
    // C_1 = C_2 sits at (0, 1.732) and R_2 = S_2.
    expect_circle(chain.circles[2], 0.0, 1.73205080757, 2.0);
    EXPECT_EQ(chain.probes[1], chain.sums[2]);
}

TEST(BuildChain, AxisCases)
{
    const ChainConstruction pi = build_chain(CoefficientSequence({1, 2, 3}), Angle(kPi));
    EXPECT_TRUE(pi.degenerate_axis);
    EXPECT_TRUE(pi.circles.empty());
    ASSERT_EQ(pi.sums.size(), 3u);
    EXPECT_NEAR(pi.sums[0].x, 1.0, 1e-15);
    EXPECT_NEAR(pi.sums[1].x, -1.0, 1e-15);
    EXPECT_NEAR(pi.sums[2].x, 2.0, 1e-15);

    const ChainConstruction zero = build_chain(CoefficientSequence({1, 2, 3}), Angle(0.0));
    EXPECT_TRUE(zero.degenerate_axis);
    EXPECT_EQ(zero.sums.back(), (Point2{6.0, 0.0}));

    const AxisReport rep = verify_axis_chain(pi, 1e-9);
    EXPECT_TRUE(rep.passed);
    EXPECT_EQ(rep.expected_sign, 1);
    EXPECT_TRUE(verify_axis_chain(build_chain(CoefficientSequence({1, 2}), Angle(kPi)), 1e-9).passed);
    EXPECT_EQ(expected_axis_sign(Orientation::External, 1, AngleClass::Pi), -1);
}

TEST(BuildChain, RejectsNonMonotone)
{
    EXPECT_EQ(code_of([] { build_chain(CoefficientSequence({3, 2, 1}), Angle(1.0)); }),
              ErrorCode::NotMonotone);
    EXPECT_EQ(code_of([] { build_chain(CoefficientSequence({1, 3, 2}), Angle(1.0)); }),
              ErrorCode::NotMonotone);
}

TEST(BuildChain, RadiiFollowCoefficients)
{
    oracle::Corpus corpus(35);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = corpus.non_decreasing(corpus.size(1, 50));
        const double theta = corpus.uniform(0.001, 2 * kPi - 0.001);
        if (std::abs(theta - kPi) < 1e-3)
            continue;
        const ChainConstruction chain = build_chain(CoefficientSequence(c), Angle(theta));
        const double csc = 1.0 / std::sin(Angle(theta).canonical() / 2);
        for (std::size_t k = 0; k < c.size(); ++k) {
            EXPECT_NEAR(chain.circles[k].radius, c[k] / 2 * csc, 1e-14 * c[k] * csc);
            if (k > 0)
                EXPECT_LE(chain.circles[k - 1].radius, chain.circles[k].radius);
        }
    }
}

TEST(VerifyChain, ThirdOfPi)
{
    const auto chain = build_chain(CoefficientSequence({1, 2, 3}), Angle(kPi / 3));
    const VerificationReport rep = verify_chain(chain, 1e-9);
    EXPECT_TRUE(rep.passed);
    ASSERT_EQ(rep.tangency_residuals.size(), 2u);
    EXPECT_LT(rep.tangency_residuals[0], 1e-14);
    EXPECT_EQ(rep.membership_residuals.size(), 4u);
    EXPECT_EQ(rep.probe_residuals.size(), 2u);
    EXPECT_EQ(rep.collinearity_residuals.size(), 2u);
    EXPECT_DOUBLE_EQ(rep.scale, 3.0);
    EXPECT_NEAR(rep.nonvanishing_magnitude, std::hypot(0.5, 4.33012701892), 1e-10);
}

TEST(VerifyChain, EqualCoefficientsGiveExactZeros)
{
    for (double theta : {0.3, 1.0, 2.0, 3.0}) {
        const auto chain = build_chain(CoefficientSequence({1, 1}), Angle(theta));
        const VerificationReport rep = verify_chain(chain, 1e-9);
        EXPECT_TRUE(rep.passed);
        EXPECT_EQ(rep.tangency_residuals, std::vector<double>{0.0});
        EXPECT_EQ(rep.collinearity_residuals, std::vector<double>{0.0});
    }
}

// Residuals recomputed from raw long-double trigonometric sums, never touching
// the chain builder; the report and the recomputation must both pass.
TEST(VerifyChain, RandomChainsAgainstIndependentResiduals)
{
    oracle::Corpus corpus(36);
    const double theta = 1.234;
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = corpus.non_decreasing(51);
        const CoefficientSequence p(c);
        const auto chain = build_chain(p, Angle(theta));
        const VerificationReport rep = verify_chain(chain, 1e-9);
        EXPECT_TRUE(rep.passed);

        const long double csc = 1.0L / std::sin(theta / 2.0L);
        long double max_r = 0;
        std::vector<oracle::LCircle> ref;
        for (std::size_t k = 0; k < c.size(); ++k) {
            ref.push_back(oracle::chain_circle(c, theta, k));
            max_r = std::max(max_r, ref.back().radius);
            EXPECT_NEAR(static_cast<double>(ref.back().radius), c[k] / 2 * static_cast<double>(csc),
                        1e-9);
        }
        for (std::size_t k = 1; k < c.size(); ++k) {
            const auto rk1 = oracle::sum_point(c, theta, k - 1);
            const auto sk = oracle::probe_point(c, theta, k);
            const long double gap = oracle::dist(ref[k].center, ref[k - 1].center);
            EXPECT_LT(std::abs(gap - (ref[k].radius - ref[k - 1].radius)), 1e-9L * max_r);
            EXPECT_LT(std::abs(oracle::dist(ref[k].center, rk1) - ref[k].radius), 1e-9L * max_r);
            EXPECT_LT(std::abs(oracle::dist(ref[k - 1].center, sk) - ref[k - 1].radius),
                      1e-9L * max_r);
            EXPECT_LT(std::abs(oracle::det3(rk1, ref[k - 1].center, ref[k].center)),
                      1e-8L * max_r * max_r);
            // The library's circles agree with the oracle's.
            EXPECT_NEAR(chain.circles[k].center.x, static_cast<double>(ref[k].center.x),
                        1e-9 * static_cast<double>(max_r));
            EXPECT_NEAR(chain.circles[k].center.y, static_cast<double>(ref[k].center.y),
                        1e-9 * static_cast<double>(max_r));
        }
        EXPECT_LT(max_of(rep.tangency_residuals), 1e-9 * rep.scale);
    }
}

TEST(VerifyChain, LowerHalfAnglesStillInterlace)
{
    oracle::Corpus corpus(37);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = corpus.non_decreasing(corpus.size(2, 30));
        const double theta = corpus.uniform(kPi + 0.01, 2 * kPi - 0.01);
        EXPECT_TRUE(verify_chain(build_chain(CoefficientSequence(c), Angle(theta)), 1e-9).passed);
    }
}

TEST(VerifyChain, Errors)
{
    const auto axis = build_chain(CoefficientSequence({1, 2}), Angle(kPi));
    EXPECT_EQ(code_of([&] { verify_chain(axis, 1e-9); }), ErrorCode::DegenerateChain);
    auto internal = build_chain(CoefficientSequence({1, 2}), Angle(1.0));
    internal.orientation = Orientation::Internal;
    EXPECT_EQ(code_of([&] { verify_chain(internal, 1e-9); }), ErrorCode::WrongOrientation);
}

TEST(VerifyChain, DetectsCorruptedCircle)
{
    auto chain = build_chain(CoefficientSequence({1, 2, 3, 4}), Angle(1.0));
    chain.circles[2].center.x += 1e-6;
    EXPECT_FALSE(verify_chain(chain, 1e-9).passed);
}

TEST(NonvanishingWitness, AxisSignRules)
{
    EXPECT_NEAR(nonvanishing_witness(CoefficientSequence({1, 2, 3}), Angle(kPi)).magnitude, 2.0,
                1e-14);
    const auto odd = nonvanishing_witness(CoefficientSequence({1, 2}), Angle(kPi));
    EXPECT_NEAR(odd.magnitude, 1.0, 1e-14);
    EXPECT_LT(odd.endpoint.real(), 0.0);
    EXPECT_GT(odd.margin, 0.0);
}

TEST(NonvanishingWitness, RootOfUnityCase)
{
    EXPECT_EQ(code_of([] {
                  nonvanishing_witness(CoefficientSequence({1, 1, 1}), Angle(2 * kPi / 3));
              }),
              ErrorCode::RootOfUnityCase);
    EXPECT_EQ(code_of([] {
                  nonvanishing_witness(CoefficientSequence({2, 2, 2, 2}), Angle(kPi / 2));
              }),
              ErrorCode::RootOfUnityCase);
    // Equal coefficients away from those angles are fine, and theta = 0 is trivial.
    EXPECT_NO_THROW(nonvanishing_witness(CoefficientSequence({1, 1, 1}), Angle(1.0)));
    EXPECT_NO_THROW(nonvanishing_witness(CoefficientSequence({1, 1, 1}), Angle(0.0)));
}

TEST(NonvanishingWitness, EqualCoefficientsMatchClosedForm)
{
    oracle::Corpus corpus(38);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = corpus.size(1, 30);
        const double theta = corpus.uniform(0.01, 2 * kPi - 0.01);
        const Complex closed = geometric_sum_closed_form(static_cast<int>(n), theta);
        // Stay away from the (n+1)-st roots of unity, where both sides cancel.
        if (std::abs(1.0 - std::polar(1.0, static_cast<double>(n + 1) * theta)) < 1e-2)
            continue;
        const auto w = nonvanishing_witness(CoefficientSequence(std::vector<double>(n + 1, 1.0)),
                                            Angle(theta));
        EXPECT_NEAR(w.magnitude, std::abs(closed), 1e-12 * std::abs(closed));
    }
}

TEST(NonvanishingWitness, Errors)
{
    EXPECT_EQ(code_of([] { nonvanishing_witness(CoefficientSequence({2, 1}), Angle(1.0)); }),
              ErrorCode::NotMonotone);
    // A nearly equal pair at theta = pi cancels below the floor.
    EXPECT_EQ(code_of([] {
                  nonvanishing_witness(CoefficientSequence({1.0, 1.0 + 1e-15}), Angle(kPi));
              }),
              ErrorCode::NonvanishingFloor);
}
