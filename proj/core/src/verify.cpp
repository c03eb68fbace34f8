#include "trimap/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace trimap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kOne{1.0, 0.0};

// Deterministic across standard libraries, unlike the distribution adaptors.
double u01(std::mt19937& g) {
    return (g() >> 5) * 0x1.0p-27;
}

double rel(ComplexValue got, ComplexValue want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

template <typename... Args>
std::string note_fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

struct Runner {
    VerifyReport rep;
    std::optional<double> tol;

    void add(const char* name, double residual, double def_tol, std::string note = {}) {
        const double t = tol ? *tol : def_tol;
        rep.checks.push_back({name, residual <= t, residual, t, std::move(note)});
    }
};

void run_gamma(Runner& r) {
    std::mt19937 rng(916801u);
    double refl = 0.0, recur = 0.0;
    auto probe = [&](ComplexValue z) {
        const ComplexValue rhs = kPi / std::sin(kPi * z);
        refl = std::max(refl, std::abs(gamma(z) * gamma(1.0 - z) - rhs) / std::abs(rhs));
        const ComplexValue g1 = gamma(z + 1.0);
        recur = std::max(recur, std::abs(g1 - z * gamma(z)) / std::abs(g1));
    };
    for (int i = 0; i < 60; ++i) {
        const double re = -4.5 + 9.0 * u01(rng);
        double im = 0.1 + 2.9 * u01(rng);
        if (i % 2)
            im = -im;
        probe(ComplexValue(re, im));
    }
    for (double x : {0.5, -0.5, -2.5, 3.5, -5.5})
        probe(ComplexValue(x, 0.0));
    r.add("gamma_reflection", refl, 1e-11, "60 complex points plus real half-integers");
    r.add("gamma_recurrence", recur, 1e-12);
}

void run_hyp(Runner& r, const HypParams& p) {
    const double sets[2][3] = {{p.alpha, p.beta, p.gamma_},
                               {p.alpha_p, p.beta_p, p.gamma_p}};

    double cont = 0.0;
    const SeriesConfig ref_cfg{6000, 1e-14};
    for (const auto& s : sets)
        for (double rho : {0.55, 0.7, 0.85})
            for (int k = 0; k < 6; ++k) {
                const ComplexValue xi = std::polar(rho, kPi * (2 * k + 1) / 6.0);
                cont = std::max(cont, rel(hyp2f1(s[0], s[1], s[2], xi),
                                          hyp2f1_series(s[0], s[1], s[2], xi, ref_cfg)));
            }
    r.add("continuation", cont, 1e-9, "dispatch vs direct series on |xi| in [0.55,0.85]");

    double gauss = 0.0;
    for (const auto& s : sets) {
        const double want = gamma_real(s[2]) * gamma_real(s[2] - s[0] - s[1]) /
                            (gamma_real(s[2] - s[0]) * gamma_real(s[2] - s[1]));
        gauss = std::max(gauss, rel(hyp2f1(s[0], s[1], s[2], kOne), want));
    }
    const HypParams q = params_from_signature(validate_signature(3, 3, 4));
    const ComplexValue g334 = hyp2f1(q.alpha, q.beta, q.gamma_, kOne);
    const double trig = std::sin(3.0 * kPi / 8.0) / std::sin(kPi / 3.0);
    gauss = std::max(gauss, rel(g334, trig));
    r.add("gauss_value", gauss, 1e-10,
          note_fmt("2F1(1/24,7/24;2/3;1)=%.12g vs sin(3pi/8)/sin(pi/3)=%.12g",
                   g334.real(), trig));

    double dfd = 0.0;
    const double h = 1e-6;
    const ComplexValue dpts[5] = {{0.3, 0.1}, {-0.4, 0.3}, {0.2, -0.25}, {1.5, 1.5},
                                  {-3.0, 0.5}};
    for (const auto& s : sets)
        for (ComplexValue xi : dpts) {
            const ComplexValue fd =
                (hyp2f1(s[0], s[1], s[2], xi + h) - hyp2f1(s[0], s[1], s[2], xi - h)) /
                (2.0 * h);
            dfd = std::max(dfd, rel(hyp2f1_deriv(s[0], s[1], s[2], xi), fd));
        }
    r.add("deriv_fd", dfd, 1e-6);

    double ode = 0.0;
    const ComplexValue opts[8] = {{0.3, 0.1}, {0.5, 0.45}, {-0.7, 0.2}, {0.0, 3.0},
                                  {2.0, 2.0}, {-12.0, 0.5}, {0.95, 0.05}, {0.9, 0.0}};
    for (const auto& s : sets)
        for (ComplexValue xi : opts) {
            const ComplexValue f0 = hyp2f1(s[0], s[1], s[2], xi);
            const ComplexValue f1 = hyp2f1_deriv(s[0], s[1], s[2], xi);
            const ComplexValue f2 = s[0] * (s[0] + 1.0) * s[1] * (s[1] + 1.0) /
                                    (s[2] * (s[2] + 1.0)) *
                                    hyp2f1(s[0] + 2.0, s[1] + 2.0, s[2] + 2.0, xi);
            const ComplexValue res = xi * (kOne - xi) * f2 +
                                     (s[2] - (s[0] + s[1] + 1.0) * xi) * f1 -
                                     s[0] * s[1] * f0;
            ode = std::max(ode, std::abs(res) / std::max(1.0, std::abs(s[0] * s[1] * f0)));
        }
    r.add("ode_residual", ode, 1e-9);
}

void run_geometry(Runner& r, const HypParams& p, const TriangleEmbedding& emb) {
    std::mt19937 rng(334455u);
    double sides_res = 0.0;
    int made = 0;
    while (made < 100) {
        const int n1 = 3 + static_cast<int>(rng() % 58);
        const int n2 = 3 + static_cast<int>(rng() % 58);
        const int n3 = 3 + static_cast<int>(rng() % 58);
        if (n1 == 3 && n2 == 3 && n3 == 3)
            continue;
        const Signature s = validate_signature(n1, n2, n3);
        sides_res = std::max(sides_res, std::abs(tanh_sq_half_dist_angles(s) -
                                     tanh_sq_half_dist_sines(params_from_signature(s))));
        ++made;
    }
    r.add("side_sine_identity", sides_res, 1e-12, "100 random signatures, orders in [3,60]");

    auto tanh_sq_pair = [](ComplexValue u, ComplexValue v) {
        const double t = std::tanh(0.5 * hyperbolic_distance(u, v));
        return t * t;
    };
    const double r12 =
        std::abs(tanh_sq_pair(emb.w1, emb.w2_embedded) - tanh_sq_side(p.sig, 3));
    const double r13 =
        std::abs(tanh_sq_pair(emb.w1, emb.w3_embedded) - tanh_sq_side(p.sig, 2));
    const double r23 =
        std::abs(tanh_sq_pair(emb.w2_embedded, emb.w3_embedded) - tanh_sq_side(p.sig, 1));
    r.add("triangle_sides", std::max({r12, r13, r23}), 1e-8,
          "embedded vertex distances vs the angle form, all three sides");

    const TriangleVertices tv = vertices(p);
    const ComplexValue lim = vertex_w3_limit(p);
    r.add("w3_audit", std::max(r13, r23), 1e-8,
          note_fmt("printed w3=%.9g%+.9gi, lim f(it)=%.9g%+.9gi, |diff|=%.3e",
                   tv.w3.real(), tv.w3.imag(), lim.real(), lim.imag(),
                   std::abs(tv.w3 - lim)));

    double sg = 0.0;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            const ComplexValue xi =
                ComplexValue(0.5, 0.0) + std::polar(0.04 * (a + 1), kPi * b / 9.0);
            const ComplexValue rhs = schwarzian_rhs(p.sig, xi);
            sg = std::max(sg, std::abs(schwarzian_lhs(p, xi) - rhs) /
                                  std::max(1.0, std::abs(rhs)));
        }
    r.add("schwarzian_grid", sg, 1e-8, "10x10 polar grid, |xi-1/2| <= 0.4, Im >= 0");

    const HypParams q = params_from_signature(validate_signature(4, 4, 4));
    const double spot = std::abs(schwarzian_lhs(q, ComplexValue(0.5, 0.0)) - 45.0 / 8.0);
    r.add("schwarzian_spot_444", spot, 1e-8, "{f,xi}(1/2) = 45/8 for signature (4,4,4)");
}

void run_derivative(Runner& r, const HypParams& p, const TriangleEmbedding& emb) {
    std::mt19937 rng(771122u);
    ComplexValue pts[20];
    for (auto& xi : pts)
        xi = ComplexValue(-1.5 + 3.0 * u01(rng), 0.05 + 0.7 * u01(rng));

    ComplexValue wvals[20];
    double wmax = 0.0;
    for (int i = 0; i < 20; ++i) {
        const BasisPair b = basis_solutions(p, pts[i], emb.cfg);
        const BasisPair d = basis_derivatives(p, pts[i], emb.cfg);
        wvals[i] = (b.g1 * d.g2 - d.g1 * b.g2) * cpow(pts[i], p.gamma_) *
                   cpow(kOne - pts[i], p.alpha + p.beta + 1.0 - p.gamma_);
        wmax = std::max(wmax, std::abs(wvals[i] - emb.C0));
    }
    double spread = 0.0;
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j)
            spread = std::max(spread, std::abs(wvals[i] - wvals[j]));
    r.add("wronskian_constant", wmax, 1e-9,
          note_fmt("spread=%.3e over 20 points, C0=%.12g", spread, emb.C0));

    double ch = 0.0;
    for (ComplexValue xi : pts)
        ch = std::max(ch, std::abs(dw_dxi(emb, xi) * dxi_dw_closed(emb, xi) - kOne));
    r.add("chain_rule", ch, 1e-10);

    double dfd = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 8; ++i) {
        const ComplexValue fd =
            (uniformizer_w(emb, pts[i] + h) - uniformizer_w(emb, pts[i] - h)) / (2.0 * h);
        dfd = std::max(dfd, rel(dw_dxi(emb, pts[i]), fd));
    }
    r.add("dw_dxi_fd", dfd, 1e-6);

    double nfd = 0.0;
    const double hw = 1e-5;
    const ComplexValue npts[5] = {{0.2, 0.1}, {0.4, 0.2}, {0.15, 0.3}, {0.6, 0.1},
                                  {0.35, 0.05}};
    for (ComplexValue xi0 : npts) {
        const ComplexValue w = uniformizer_w(emb, xi0);
        const ComplexValue fd =
            (invert_xi(emb, w + hw) - invert_xi(emb, w - hw)) / (2.0 * hw);
        nfd = std::max(nfd, rel(dxi_dw_closed(emb, xi0), fd));
    }
    r.add("dxi_dw_newton_fd", nfd, 1e-6);

    const double k1 = constant_K(p);
    const double k2 = constant_K_dist_route(p);
    const double k3 = constant_K_from_tanh(p, std::sqrt(tanh_sq_half_dist_angles(p.sig)));
    const double ktr =
        std::max({std::abs(k1 - k2), std::abs(k1 - k3), std::abs(k2 - k3)}) / k1;
    r.add("k_triple_agreement", ktr, 1e-9, note_fmt("K=%.17g", k1));
}

void run_automorphy(Runner& r, const HypParams& p, const TriangleEmbedding& emb) {
    const MoebiusElement gen = elliptic_generator(emb.w1, p.sig.n1);
    auto from_disk = [&](ComplexValue z) {
        return (emb.w1 - std::conj(emb.w1) * z) / (kOne - z);
    };

    double am = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) {
            const ComplexValue z = std::polar(std::tanh(0.05 * (i + 1)), -2.5 + 1.55 * j);
            am = std::max(am, automorphy_residual(emb, gen, from_disk(z)));
        }
    r.add("automorphy_residual", am, 1e-8,
          "20 points, hyperbolic radius <= 0.5 about w1");

    ComplexValue pw[4] = {kOne, {}, {}, kOne};
    for (int k = 0; k < p.sig.n1; ++k) {
        const ComplexValue a = pw[0] * gen.a + pw[1] * gen.c;
        const ComplexValue b = pw[0] * gen.b + pw[1] * gen.d;
        const ComplexValue c = pw[2] * gen.a + pw[3] * gen.c;
        const ComplexValue d = pw[2] * gen.b + pw[3] * gen.d;
        pw[0] = a, pw[1] = b, pw[2] = c, pw[3] = d;
    }
    const double sg = (pw[0].real() > 0.0) ? 1.0 : -1.0;
    const double rot = std::max({std::abs(pw[0] - sg), std::abs(pw[1]), std::abs(pw[2]),
                                 std::abs(pw[3] - sg)});
    r.add("rotation_order", rot, 1e-10,
          note_fmt("generator class: %s, trace=%.12g",
                   to_string(classify_element(gen)), gen.a.real() + gen.d.real()));

    double xs[8], ys[8], xbar = 0.0, ybar = 0.0;
    const double phi = 0.5 * kPi / p.sig.n1;
    for (int i = 0; i < 8; ++i) {
        const double rad = 1e-4 * std::pow(10.0, i / 7.0);
        const ComplexValue w = from_disk(std::polar(rad, phi));
        xs[i] = std::log(rad);
        ys[i] = std::log(std::abs(invert_xi_sector(emb, w)));
        xbar += xs[i] / 8.0;
        ybar += ys[i] / 8.0;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 8; ++i) {
        num += (xs[i] - xbar) * (ys[i] - ybar);
        den += (xs[i] - xbar) * (xs[i] - xbar);
    }
    const double slope = num / den;
    r.add("ramification_slope", std::abs(slope - p.sig.n1), 1e-3,
          note_fmt("fit slope %.6f vs n1=%d", slope, p.sig.n1));
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport run_verify(const Signature& sig, const std::string& suite,
                        std::optional<double> tol_override) {
    static const std::array<const char*, 6> known = {"gamma",      "hyp",        "geometry",
                                                     "derivative", "automorphy", "all"};
    if (std::find_if(known.begin(), known.end(),
                     [&](const char* k) { return suite == k; }) == known.end())
        throw std::invalid_argument("unknown verify suite: " + suite);
    if (tol_override && !(*tol_override > 0.0))
        throw std::invalid_argument("tolerance override must be positive");

    Runner r;
    r.rep.sig = sig;
    r.rep.suite = suite;
    r.tol = tol_override;
    const HypParams p = params_from_signature(sig);
    const bool all = suite == "all";

    std::optional<TriangleEmbedding> emb;
    auto need_emb = [&]() -> const TriangleEmbedding& {
        if (!emb)
            emb = build_embedding(p);
        return *emb;
    };

    if (all || suite == "gamma")
        run_gamma(r);
    if (all || suite == "hyp")
        run_hyp(r, p);
    if (all || suite == "geometry")
        run_geometry(r, p, need_emb());
    if (all || suite == "derivative")
        run_derivative(r, p, need_emb());
    if (all || suite == "automorphy")
        run_automorphy(r, p, need_emb());
    return r.rep;
}

}  // namespace trimap
