#pragma once

#include <vector>

#include "trimap/schwarz_geometry.hpp"

namespace trimap {

// Precomputed Newton seed: xi and its image under the uniformizer.
struct MapSeed {
    ComplexValue w, xi;
};

struct MapSample {
    ComplexValue w, xi, dxi_dw;
};

// Normalized embedding of the triangle into the upper half plane with the
// xi = 0 vertex pinned at w1. All data derived from the signature except w1.
struct TriangleEmbedding {
    HypParams params;
    ComplexValue w1;
    double K = 0.0;            // modulus scale, tanh(d12/2) / f(1)
    double C0 = 0.0;           // Wronskian constant 1 - gamma = 1/n1
    ComplexValue C;            // 1 / (C0 K (w1 - conj w1))
    ComplexValue w2_embedded;  // image of xi = 1
    ComplexValue w3_embedded;  // image of xi = infinity (limit-based)
    std::vector<MapSeed> seeds;
    SeriesConfig cfg;
};

// Gamma-product form: sqrt of the reflected parameter quotient times
// Gamma(gamma)/Gamma(gamma').
double constant_K(const HypParams& p);

// K = tanh(d12/2) * Gamma(gamma) Gamma(1-alpha) Gamma(1-beta) /
//     (Gamma(gamma') Gamma(1-alpha') Gamma(1-beta')) for a given half-side
// tanh; the two distance identities supply independent values of it.
double constant_K_from_tanh(const HypParams& p, double tanh_half_d12);

// Convenience: tanh from the sine-quotient identity.
double constant_K_dist_route(const HypParams& p);

TriangleEmbedding build_embedding(const HypParams& p, ComplexValue w1 = {0.0, 1.0},
                                  const SeriesConfig& cfg = {});

// w(xi) = w1 + K g2 (w1 - conj w1) / (g1 - K g2); cancellation-free near xi=0.
ComplexValue uniformizer_w(const TriangleEmbedding& emb, ComplexValue xi);

// dw/dxi = K (w1 - conj w1) C0 xi^(-gamma) (1-xi)^(gamma-alpha-beta-1)
//          / (g1 - K g2)^2.
ComplexValue dw_dxi(const TriangleEmbedding& emb, ComplexValue xi);

// dxi/dw = C xi^(1-1/n1) (1-xi)^(1-1/n2) (F1 - K xi^(1/n1) F2)^2; the exact
// reciprocal of dw_dxi wherever both are finite, and zero at xi = 0, 1.
ComplexValue dxi_dw_closed(const TriangleEmbedding& emb, ComplexValue xi);

bool inside_fundamental_triangle(const TriangleEmbedding& emb, ComplexValue w);

// Damped Newton inverse of the uniformizer; w must lie in the closed
// fundamental triangle (throws OutsideFundamentalDomain otherwise).
ComplexValue invert_xi(const TriangleEmbedding& emb, ComplexValue w);

// Inverse after reduction by the rotation about w1 and the mirror across the
// side w1w2; defined on the whole rotation orbit of the closed kite.
ComplexValue invert_xi_sector(const TriangleEmbedding& emb, ComplexValue w);

// |xi(w) - xi(Aw)| through the sector inverse.
double automorphy_residual(const TriangleEmbedding& emb, const MoebiusElement& a,
                           ComplexValue w);

}  // namespace trimap
