#pragma once

#include "trimap/group_algebra.hpp"

namespace trimap {

// Values of the two solutions g1 = 2F1(alpha,beta;gamma;xi) and
// g2 = xi^(1-gamma) 2F1(alpha',beta';gamma';xi); at xi -> 0, (g1,g2) -> (1,0).
struct BasisPair {
    ComplexValue g1, g2;
};

// Vertices of the image triangle in the Schwarz-map normalization:
// w1 = 0, w2 = f(1) real positive, arg(w3) = pi(1-gamma).
struct TriangleVertices {
    ComplexValue w1, w2, w3;
};

BasisPair basis_solutions(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg = {});

// Derivatives (g1', g2') of the basis pair; xi != 0 (g2' diverges there).
BasisPair basis_derivatives(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg = {});

// f(xi) = g2/g1.
ComplexValue schwarz_map(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg = {});

// Gamma-product vertex formulas, w3 in its classical closed form.
// The w3 expression is under audit: cross-check against vertex_w3_limit before
// trusting it (the verify suite reports both).
TriangleVertices vertices(const HypParams& p);

// lim f(it), t -> +infty, by Neville extrapolation in t^(-1/n3); the map is a
// power series in that variable, so geometric nodes converge fast.
ComplexValue vertex_w3_limit(const HypParams& p, const SeriesConfig& cfg = {});

// tanh^2 of half the side length from the angle form; `opposite` in {1,2,3}
// names the vertex whose angle pi/n_opposite faces the side.
double tanh_sq_side(const Signature& sig, int opposite);

// Side w1w2 (opposite angle pi/n3), the printed special case.
double tanh_sq_half_dist_angles(const Signature& sig);

// sin(pi alpha) sin(pi beta) / (sin(pi alpha') sin(pi beta')).
double tanh_sq_half_dist_sines(const HypParams& p);

// Upper-half-plane distance, tanh(d/2) = |(z-w)/(z-conj w)|.
double hyperbolic_distance(ComplexValue z, ComplexValue w);

ComplexValue schwarzian_rhs(const Signature& sig, ComplexValue xi);

// {f,xi} computed analytically through the ODE: f''/f' = -P - 2 g1'/g1 and
// one more differentiation eliminates g1'' via the ODE; no finite differences.
ComplexValue schwarzian_lhs(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg = {});

}  // namespace trimap
