#include "trimap/schwarz_geometry.hpp"

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

namespace {

using trimap::ComplexValue;

trimap::HypParams params(int a, int b, int c) {
    return trimap::params_from_signature(trimap::validate_signature(a, b, c));
}

void expect_rel(ComplexValue got, ComplexValue want, double tol, const char* what) {
    EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << what << ": got " << got
                                                          << " want " << want;
}

TEST(Basis, ValuesAtOrigin) {
    const trimap::BasisPair b = trimap::basis_solutions(params(3, 3, 4), {0.0, 0.0});
    EXPECT_EQ(b.g1, ComplexValue(1.0, 0.0));
    EXPECT_EQ(b.g2, ComplexValue(0.0, 0.0));
}

TEST(Basis, SecondSolutionBranchPower) {
    const trimap::HypParams p = params(3, 3, 4);
    const ComplexValue xi(1e-6, 0.0);
    const trimap::BasisPair b = trimap::basis_solutions(p, xi);
    // g2 ~ xi^{1-gamma} = xi^{1/3} near the origin.
    expect_rel(b.g2, std::pow(xi, ComplexValue(1.0 / 3.0, 0.0)), 1e-6, "g2 leading power");
}

TEST(Basis, DerivativesMatchFiniteDifference) {
    const trimap::HypParams p = params(3, 4, 5);
    const double h = 1e-6;
    for (const ComplexValue xi : {ComplexValue(0.3, 0.2), ComplexValue(-0.5, 0.4)}) {
        const trimap::BasisPair d = trimap::basis_derivatives(p, xi);
        const trimap::BasisPair fp = trimap::basis_solutions(p, xi + h);
        const trimap::BasisPair fm = trimap::basis_solutions(p, xi - h);
        expect_rel(d.g1, (fp.g1 - fm.g1) / (2.0 * h), 1e-6, "g1'");
        expect_rel(d.g2, (fp.g2 - fm.g2) / (2.0 * h), 1e-6, "g2'");
    }
    EXPECT_THROW(trimap::basis_derivatives(p, {0.0, 0.0}), trimap::DomainError);
}

TEST(SchwarzMap, ValueAtOneIsVertexRatio) {
    expect_rel(trimap::schwarz_map(params(3, 3, 4), {1.0, 0.0}),
               {1.701065831226866561945, 0.0}, 1e-12, "s(1) (3,3,4)");
}

TEST(Vertices, FrozenSecondVertex) {
    EXPECT_NEAR(trimap::vertices(params(3, 3, 4)).w2.real(), 1.701065831226866561945, 1e-12);
    EXPECT_NEAR(trimap::vertices(params(4, 4, 4)).w2.real(), 1.609079839244533764115, 1e-12);
    EXPECT_NEAR(trimap::vertices(params(3, 4, 5)).w2.real(), 1.850837759460268752588, 1e-12);
    EXPECT_NEAR(trimap::vertices(params(5, 7, 9)).w2.real(), 1.548705324748021858625, 1e-12);
    EXPECT_EQ(trimap::vertices(params(3, 3, 4)).w1, ComplexValue(0.0, 0.0));
}

TEST(Vertices, PrintedThirdVertexFormula) {
    const trimap::TriangleVertices v = trimap::vertices(params(3, 3, 4));
    expect_rel(v.w3, {6.136563748296810984, 10.628840195935388118}, 1e-12, "printed w3");
    EXPECT_NEAR(std::arg(v.w3), M_PI / 3.0, 1e-13);
}

TEST(Vertices, LimitBasedThirdVertex) {
    expect_rel(trimap::vertex_w3_limit(params(3, 3, 4)),
               {0.99046655828529285177, 1.71553840214800795514}, 1e-10, "w3 limit (3,3,4)");
    const double r = 1.137791265800369602;
    expect_rel(trimap::vertex_w3_limit(params(4, 4, 4)), {r, r}, 1e-10, "w3 limit (4,4,4)");
}

TEST(Vertices, PrintedFormulaDisagreesWithLimit) {
    // The closed-form w3 and the boundary limit of the Schwarz map differ by
    // far more than any plausible roundoff; the limit is what the distance
    // identities certify, so downstream geometry uses vertex_w3_limit.
    const ComplexValue printed = trimap::vertices(params(3, 3, 4)).w3;
    const ComplexValue limit = trimap::vertex_w3_limit(params(3, 3, 4));
    EXPECT_GT(std::abs(printed - limit), 1.0);
}

TEST(Sides, FrozenTanhSqValues) {
    using trimap::tanh_sq_side;
    const trimap::Signature s334 = trimap::validate_signature(3, 3, 4);
    EXPECT_NEAR(tanh_sq_side(s334, 3), 0.121320343559642573, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s334, 2), 0.164524664599176231, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s334, 1), 0.164524664599176231, 1e-15);

    const trimap::Signature s444 = trimap::validate_signature(4, 4, 4);
    for (int opp = 1; opp <= 3; ++opp) {
        EXPECT_NEAR(tanh_sq_side(s444, opp), 0.414213562373095049, 1e-15);
    }

    const trimap::Signature s345 = trimap::validate_signature(3, 4, 5);
    EXPECT_NEAR(tanh_sq_side(s345, 3), 0.309980661273693669, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s345, 2), 0.371812226881092631, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s345, 1), 0.441244612280573197, 1e-15);

    const trimap::Signature s579 = trimap::validate_signature(5, 7, 9);
    EXPECT_NEAR(tanh_sq_side(s579, 3), 0.734843503242341581, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s579, 2), 0.784092904351043703, 1e-15);
    EXPECT_NEAR(tanh_sq_side(s579, 1), 0.835484424383038792, 1e-15);
}

TEST(Sides, AngleAndSineRoutesAgree) {
    for (const auto [a, b, c] : {std::array<int, 3>{3, 3, 4}, {4, 4, 4}, {3, 4, 5},
                                 {5, 7, 9}, {13, 29, 41}}) {
        const trimap::Signature s = trimap::validate_signature(a, b, c);
        EXPECT_NEAR(trimap::tanh_sq_half_dist_angles(s),
                    trimap::tanh_sq_half_dist_sines(params(a, b, c)), 1e-15)
            << a << "," << b << "," << c;
        EXPECT_NEAR(trimap::tanh_sq_half_dist_angles(s), trimap::tanh_sq_side(s, 3), 1e-15);
    }
}

TEST(Distance, BasicProperties) {
    const ComplexValue i(0.0, 1.0);
    EXPECT_NEAR(trimap::hyperbolic_distance(i, {0.0, 2.0}), std::log(2.0), 1e-14);
    EXPECT_DOUBLE_EQ(trimap::hyperbolic_distance(i, i), 0.0);
    const ComplexValue z(0.4, 0.9);
    const ComplexValue w(-1.2, 2.5);
    EXPECT_NEAR(trimap::hyperbolic_distance(z, w), trimap::hyperbolic_distance(w, z), 1e-15);
    EXPECT_THROW(trimap::hyperbolic_distance(z, {0.5, -0.1}), trimap::DomainError);
    EXPECT_THROW(trimap::hyperbolic_distance({0.5, 0.0}, w), trimap::DomainError);
}

TEST(Schwarzian, FrozenValueAndConsistency) {
    const trimap::HypParams p = params(3, 3, 4);
    const ComplexValue xi(0.3, 0.1);
    const ComplexValue want(6.2575, -2.7538888888888888889);
    expect_rel(trimap::schwarzian_rhs(p.sig, xi), want, 1e-13, "rhs frozen");
    expect_rel(trimap::schwarzian_lhs(p, xi), want, 1e-9, "lhs frozen");
}

TEST(Schwarzian, EquilateralSpotValue) {
    const trimap::HypParams p = params(4, 4, 4);
    const ComplexValue xi(0.5, 0.0);
    EXPECT_NEAR(trimap::schwarzian_rhs(p.sig, xi).real(), 45.0 / 8.0, 1e-13);
    EXPECT_NEAR(trimap::schwarzian_rhs(p.sig, xi).imag(), 0.0, 1e-13);
    EXPECT_NEAR(trimap::schwarzian_lhs(p, xi).real(), 45.0 / 8.0, 1e-9);
}

TEST(Schwarzian, PolesThrow) {
    const trimap::HypParams p = params(3, 3, 4);
    EXPECT_THROW(trimap::schwarzian_rhs(p.sig, {0.0, 0.0}), trimap::PoleError);
    EXPECT_THROW(trimap::schwarzian_rhs(p.sig, {1.0, 0.0}), trimap::PoleError);
    EXPECT_THROW(trimap::schwarzian_lhs(p, {0.0, 0.0}), trimap::PoleError);
    EXPECT_THROW(trimap::schwarzian_lhs(p, {1.0, 0.0}), trimap::PoleError);
}

TEST(Wronskian, ScaledConstantEqualsOneMinusGamma) {
    const trimap::HypParams p = params(3, 3, 4);
    for (const ComplexValue xi :
         {ComplexValue(0.25, 0.15), ComplexValue(-0.6, 0.3), ComplexValue(0.7, -0.2)}) {
        const trimap::BasisPair f = trimap::basis_solutions(p, xi);
        const trimap::BasisPair d = trimap::basis_derivatives(p, xi);
        const ComplexValue w = f.g1 * d.g2 - f.g2 * d.g1;
        const ComplexValue scaled = w * trimap::cpow(xi, p.gamma_) *
                                    trimap::cpow(1.0 - xi, p.alpha + p.beta - p.gamma_ + 1.0);
        EXPECT_NEAR(std::abs(scaled - ComplexValue(1.0 - p.gamma_, 0.0)), 0.0, 1e-12)
            << "xi=" << xi;
    }
}

}  // namespace
