#include "trimap/schwarz_geometry.hpp"

#include <cmath>
#include <numbers>

namespace trimap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kZero{0.0, 0.0};
constexpr ComplexValue kOne{1.0, 0.0};

}  // namespace

BasisPair basis_solutions(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg) {
    BasisPair out;
    out.g1 = hyp2f1(p.alpha, p.beta, p.gamma_, xi, cfg);
    out.g2 = cpow(xi, 1.0 - p.gamma_) * hyp2f1(p.alpha_p, p.beta_p, p.gamma_p, xi, cfg);
    return out;
}

BasisPair basis_derivatives(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg) {
    if (xi == kZero)
        throw DomainError("basis_derivatives: g2' diverges at xi = 0");
    BasisPair out;
    out.g1 = hyp2f1_deriv(p.alpha, p.beta, p.gamma_, xi, cfg);
    out.g2 = (1.0 - p.gamma_) * cpow(xi, -p.gamma_) *
                 hyp2f1(p.alpha_p, p.beta_p, p.gamma_p, xi, cfg) +
             cpow(xi, 1.0 - p.gamma_) *
                 hyp2f1_deriv(p.alpha_p, p.beta_p, p.gamma_p, xi, cfg);
    return out;
}

ComplexValue schwarz_map(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg) {
    const BasisPair b = basis_solutions(p, xi, cfg);
    if (std::abs(b.g1) < 1e-300)
        throw ZeroDenominator("schwarz_map: g1 vanishes");
    return b.g2 / b.g1;
}

TriangleVertices vertices(const HypParams& p) {
    TriangleVertices v;
    v.w1 = kZero;
    v.w2 = gamma_real(2.0 - p.gamma_) * gamma_real(p.gamma_ - p.alpha) *
           gamma_real(p.gamma_ - p.beta) /
           (gamma_real(p.gamma_) * gamma_real(1.0 - p.alpha) * gamma_real(1.0 - p.beta));
    const double mod3 = gamma_real(p.alpha) * gamma_real(p.gamma_ - p.beta) *
                        gamma_real(2.0 - p.beta) /
                        (gamma_real(p.gamma_) * gamma_real(p.alpha_p) * gamma_real(1.0 - p.beta));
    v.w3 = mod3 * std::exp(ComplexValue(0.0, kPi * (1.0 - p.gamma_)));
    return v;
}

ComplexValue vertex_w3_limit(const HypParams& p, const SeriesConfig& cfg) {
    const int n3 = p.sig.n3;
    // v0 = T^(-1/n3); shrink T for very large n3 so t stays finite in double.
    const double v0 = (n3 <= 80) ? 1e-2 : 1e-1;
    constexpr int kNodes = 6;
    double v[kNodes];
    ComplexValue y[kNodes];
    double t = std::pow(v0, -n3);
    for (int k = 0; k < kNodes; ++k) {
        v[k] = std::ldexp(v0, -k);
        y[k] = schwarz_map(p, ComplexValue(0.0, t), cfg);
        t = std::ldexp(t, n3);
    }
    for (int m = 1; m < kNodes; ++m)
        for (int k = 0; k + m < kNodes; ++k)
            y[k] = (v[k] * y[k + 1] - v[k + m] * y[k]) / (v[k] - v[k + m]);
    return y[0];
}

double tanh_sq_side(const Signature& sig, int opposite) {
    if (opposite < 1 || opposite > 3)
        throw DomainError("tanh_sq_side: opposite vertex index must be 1, 2 or 3");
    const double ang[3] = {kPi / sig.n1, kPi / sig.n2, kPi / sig.n3};
    const int i = opposite - 1;
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const double s = 0.5 * (ang[0] + ang[1] + ang[2]);
    return std::cos(s) * std::cos(s - ang[i]) /
           (std::cos(s - ang[j]) * std::cos(s - ang[k]));
}

double tanh_sq_half_dist_angles(const Signature& sig) {
    return tanh_sq_side(sig, 3);
}

double tanh_sq_half_dist_sines(const HypParams& p) {
    return std::sin(kPi * p.alpha) * std::sin(kPi * p.beta) /
           (std::sin(kPi * p.alpha_p) * std::sin(kPi * p.beta_p));
}

double hyperbolic_distance(ComplexValue z, ComplexValue w) {
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw DomainError("hyperbolic_distance: points must lie in the upper half plane");
    if (z == w)
        return 0.0;
    const double r = std::abs((z - w) / (z - std::conj(w)));
    return 2.0 * std::atanh(r);
}

ComplexValue schwarzian_rhs(const Signature& sig, ComplexValue xi) {
    if (xi == kZero || xi == kOne)
        throw PoleError("schwarzian_rhs: pole at xi = 0, 1");
    const double p1 = 1.0 / sig.n1;
    const double p2 = 1.0 / sig.n2;
    const double p3 = 1.0 / sig.n3;
    const ComplexValue omxi = kOne - xi;
    return (1.0 - p1 * p1) / (2.0 * xi * xi) +
           (1.0 - p2 * p2) / (2.0 * omxi * omxi) +
           (1.0 - p1 * p1 - p2 * p2 + p3 * p3) / (2.0 * xi * omxi);
}

ComplexValue schwarzian_lhs(const HypParams& p, ComplexValue xi, const SeriesConfig& cfg) {
    if (xi == kZero || xi == kOne)
        throw PoleError("schwarzian_lhs: pole at xi = 0, 1");
    const ComplexValue g1 = hyp2f1(p.alpha, p.beta, p.gamma_, xi, cfg);
    if (std::abs(g1) < 1e-300)
        throw ZeroDenominator("schwarzian_lhs: g1 vanishes");
    const ComplexValue r = hyp2f1_deriv(p.alpha, p.beta, p.gamma_, xi, cfg) / g1;
    const double d = p.alpha + p.beta + 1.0 - p.gamma_;
    const ComplexValue xim1 = xi - kOne;
    const ComplexValue P = p.gamma_ / xi + d / xim1;
    const ComplexValue Pp = -p.gamma_ / (xi * xi) - d / (xim1 * xim1);
    const ComplexValue Q = p.alpha * p.beta / (xi * xim1);
    // h = f''/f' = -P - 2r with r = g1'/g1; h' uses g1'' = -(P g1' + Q g1).
    const ComplexValue h = -P - 2.0 * r;
    const ComplexValue hp = -Pp + 2.0 * P * r + 2.0 * Q + 2.0 * r * r;
    return hp - 0.5 * h * h;
}

}  // namespace trimap
