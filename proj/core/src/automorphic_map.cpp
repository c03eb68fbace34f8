#include "trimap/automorphic_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trimap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kZero{0.0, 0.0};
constexpr ComplexValue kOne{1.0, 0.0};

ComplexValue cayley(const TriangleEmbedding& emb, ComplexValue w) {
    return (w - emb.w1) / (w - std::conj(emb.w1));
}

ComplexValue cayley_inv(const TriangleEmbedding& emb, ComplexValue z) {
    return (emb.w1 - std::conj(emb.w1) * z) / (kOne - z);
}

// Geodesic through u, v: vertical line when the abscissas agree, otherwise a
// circle centered on the real axis. eval() separates the two half planes.
struct Side {
    bool vertical = false;
    double x = 0.0;
    double r_sq = 0.0;

    double eval(ComplexValue w) const {
        if (vertical)
            return w.real() - x;
        return std::norm(w - ComplexValue(x, 0.0)) - r_sq;
    }
    double scale() const { return vertical ? 1.0 : r_sq; }
};

Side side_through(ComplexValue u, ComplexValue v) {
    Side s;
    if (std::abs(u.real() - v.real()) < 1e-12 * (1.0 + std::abs(u) + std::abs(v))) {
        s.vertical = true;
        s.x = 0.5 * (u.real() + v.real());
    } else {
        s.x = (std::norm(u) - std::norm(v)) / (2.0 * (u.real() - v.real()));
        s.r_sq = std::norm(u - ComplexValue(s.x, 0.0));
    }
    return s;
}

// Smallest attainable series ratio across the continuation families; cells
// where this is near 1 (the corners exp(+-i pi/3)) are skipped as seeds.
double min_family_ratio(ComplexValue xi) {
    const double axi = std::abs(xi);
    const double a1m = std::abs(kOne - xi);
    const double core = std::min(axi, axi / a1m);
    const double onem = std::min(a1m, a1m / axi);
    const double inv = std::min(1.0 / axi, 1.0 / a1m);
    return std::min({core, onem, inv});
}

}  // namespace

double constant_K(const HypParams& p) {
    const double q = gamma_real(1.0 - p.alpha) * gamma_real(1.0 - p.beta) *
                     gamma_real(p.alpha_p) * gamma_real(p.beta_p) /
                     (gamma_real(p.alpha) * gamma_real(p.beta) *
                      gamma_real(1.0 - p.alpha_p) * gamma_real(1.0 - p.beta_p));
    return std::sqrt(q) * gamma_real(p.gamma_) / gamma_real(p.gamma_p);
}

double constant_K_from_tanh(const HypParams& p, double tanh_half_d12) {
    return tanh_half_d12 * gamma_real(p.gamma_) * gamma_real(1.0 - p.alpha) *
           gamma_real(1.0 - p.beta) /
           (gamma_real(p.gamma_p) * gamma_real(1.0 - p.alpha_p) *
            gamma_real(1.0 - p.beta_p));
}

double constant_K_dist_route(const HypParams& p) {
    return constant_K_from_tanh(p, std::sqrt(tanh_sq_half_dist_sines(p)));
}

TriangleEmbedding build_embedding(const HypParams& p, ComplexValue w1,
                                  const SeriesConfig& cfg) {
    if (!(w1.imag() > 0.0))
        throw DomainError("build_embedding: w1 must lie in the upper half plane");
    TriangleEmbedding emb;
    emb.params = p;
    emb.w1 = w1;
    emb.cfg = cfg;
    emb.K = constant_K(p);
    emb.C0 = 1.0 - p.gamma_;
    const ComplexValue span = w1 - std::conj(w1);
    emb.C = 1.0 / (emb.C0 * emb.K * span);
    const BasisPair b1 = basis_solutions(p, kOne, cfg);
    emb.w2_embedded = w1 + emb.K * b1.g2 * span / (b1.g1 - emb.K * b1.g2);
    const ComplexValue s3 = vertex_w3_limit(p, cfg);
    emb.w3_embedded = w1 + emb.K * s3 * span / (kOne - emb.K * s3);
    constexpr int kGrid = 32;
    emb.seeds.reserve(kGrid * kGrid);
    for (int r = 0; r < kGrid; ++r) {
        for (int c = 0; c < kGrid; ++c) {
            const ComplexValue xi((c + 0.5) / kGrid, (r + 0.5) / kGrid);
            if (min_family_ratio(xi) > 0.985)
                continue;
            try {
                emb.seeds.push_back({uniformizer_w(emb, xi), xi});
            } catch (const Error&) {
            }
        }
    }
    return emb;
}

ComplexValue uniformizer_w(const TriangleEmbedding& emb, ComplexValue xi) {
    const BasisPair b = basis_solutions(emb.params, xi, emb.cfg);
    const ComplexValue den = b.g1 - emb.K * b.g2;
    if (std::abs(den) <= 1e-15 * (std::abs(b.g1) + emb.K * std::abs(b.g2)))
        throw ZeroDenominator("uniformizer_w: g1 - K g2 vanishes");
    return emb.w1 + emb.K * b.g2 * (emb.w1 - std::conj(emb.w1)) / den;
}

ComplexValue dw_dxi(const TriangleEmbedding& emb, ComplexValue xi) {
    if (xi == kZero || xi == kOne)
        throw PoleError("dw_dxi: singular at xi = 0, 1");
    const HypParams& p = emb.params;
    const BasisPair b = basis_solutions(p, xi, emb.cfg);
    const ComplexValue den = b.g1 - emb.K * b.g2;
    if (std::abs(den) <= 1e-15 * (std::abs(b.g1) + emb.K * std::abs(b.g2)))
        throw ZeroDenominator("dw_dxi: g1 - K g2 vanishes");
    const ComplexValue span = emb.w1 - std::conj(emb.w1);
    return emb.K * span * emb.C0 * cpow(xi, -p.gamma_) *
           cpow(kOne - xi, p.gamma_ - p.alpha - p.beta - 1.0) / (den * den);
}

ComplexValue dxi_dw_closed(const TriangleEmbedding& emb, ComplexValue xi) {
    const HypParams& p = emb.params;
    const double inv_n1 = 1.0 / p.sig.n1;
    const double inv_n2 = 1.0 / p.sig.n2;
    const ComplexValue f1 = hyp2f1(p.alpha, p.beta, p.gamma_, xi, emb.cfg);
    const ComplexValue f2 = hyp2f1(p.alpha_p, p.beta_p, p.gamma_p, xi, emb.cfg);
    const ComplexValue br = f1 - emb.K * cpow(xi, inv_n1) * f2;
    return emb.C * cpow(xi, 1.0 - inv_n1) * cpow(kOne - xi, 1.0 - inv_n2) * br * br;
}

bool inside_fundamental_triangle(const TriangleEmbedding& emb, ComplexValue w) {
    if (!(w.imag() > 0.0))
        return false;
    const ComplexValue vtx[3] = {emb.w1, emb.w2_embedded, emb.w3_embedded};
    constexpr int kSides[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& t : kSides) {
        const Side s = side_through(vtx[t[0]], vtx[t[1]]);
        const double sw = s.eval(w);
        if (std::abs(sw) <= 1e-12 * std::max(1.0, s.scale()))
            continue;
        if ((sw > 0.0) != (s.eval(vtx[t[2]]) > 0.0))
            return false;
    }
    return true;
}

ComplexValue invert_xi(const TriangleEmbedding& emb, ComplexValue w) {
    if (!(w.imag() > 0.0))
        throw DomainError("invert_xi: w must lie in the upper half plane");
    if (!inside_fundamental_triangle(emb, w))
        throw OutsideFundamentalDomain("invert_xi: w outside the closed fundamental triangle");
    const double wtol = 1e-10 * (1.0 + std::abs(w));
    ComplexValue xi;
    if (hyperbolic_distance(w, emb.w1) < 0.05) {
        xi = cpow(cayley(emb, w) / emb.K, static_cast<double>(emb.params.sig.n1));
    } else {
        if (emb.seeds.empty())
            throw NoConvergence("invert_xi: empty seed table");
        double best = std::abs(emb.seeds.front().w - w);
        xi = emb.seeds.front().xi;
        for (const MapSeed& s : emb.seeds) {
            const double d = std::abs(s.w - w);
            if (d < best) {
                best = d;
                xi = s.xi;
            }
        }
    }
    ComplexValue f = uniformizer_w(emb, xi) - w;
    for (int iter = 0; iter < 100; ++iter) {
        if (std::abs(f) <= wtol) {
            // Polish once so finite differences of the inverse see a
            // machine-accurate root, not the acceptance threshold.
            if (std::abs(f) > 0.0) {
                try {
                    xi -= f / dw_dxi(emb, xi);
                } catch (const Error&) {
                }
            }
            return xi;
        }
        ComplexValue deriv;
        try {
            deriv = dw_dxi(emb, xi);
        } catch (const Error&) {
            throw NoConvergence("invert_xi: derivative evaluation failed");
        }
        const ComplexValue step = f / deriv;
        double lambda = 1.0;
        bool improved = false;
        for (int h = 0; h < 40 && !improved; ++h) {
            const ComplexValue cand = xi - lambda * step;
            try {
                const ComplexValue fc = uniformizer_w(emb, cand) - w;
                if (std::abs(fc) < std::abs(f)) {
                    xi = cand;
                    f = fc;
                    improved = true;
                }
            } catch (const Error&) {
            }
            lambda *= 0.5;
        }
        if (!improved)
            throw NoConvergence("invert_xi: residual stopped decreasing");
    }
    throw NoConvergence("invert_xi: iteration limit reached");
}

ComplexValue invert_xi_sector(const TriangleEmbedding& emb, ComplexValue w) {
    if (!(w.imag() > 0.0))
        throw DomainError("invert_xi_sector: w must lie in the upper half plane");
    const ComplexValue z = cayley(emb, w);
    const double width = 2.0 * kPi / emb.params.sig.n1;
    const double k = std::round(std::arg(z) / width);
    const ComplexValue zr = z * std::exp(ComplexValue(0.0, -k * width));
    if (std::arg(zr) >= 0.0)
        return invert_xi(emb, cayley_inv(emb, zr));
    return std::conj(invert_xi(emb, cayley_inv(emb, std::conj(zr))));
}

double automorphy_residual(const TriangleEmbedding& emb, const MoebiusElement& a,
                           ComplexValue w) {
    return std::abs(invert_xi_sector(emb, w) - invert_xi_sector(emb, moebius_apply(a, w)));
}

}  // namespace trimap
