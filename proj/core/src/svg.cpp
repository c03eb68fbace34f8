#include "trimap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace trimap {

namespace {

struct Arc {
    double cx = 0.0, r = 0.0;
    ComplexValue a, b;
};

Arc arc_between(ComplexValue u, ComplexValue v) {
    Arc arc;
    arc.cx = (std::norm(u) - std::norm(v)) / (2.0 * (u.real() - v.real()));
    arc.r = std::abs(u - ComplexValue(arc.cx, 0.0));
    arc.a = u;
    arc.b = v;
    return arc;
}

double arc_angle(const Arc& c, ComplexValue p) {
    return std::atan2(p.imag(), p.real() - c.cx);
}


}  // namespace

SvgMapping svg_mapping(const TriangleEmbedding& emb, int width, int height) {
    if (width < 16 || height < 16)
        throw DomainError("svg_mapping: viewport must be at least 16x16");
    const ComplexValue vtx[3] = {emb.w1, emb.w2_embedded, emb.w3_embedded};
    double xmin = vtx[0].real(), xmax = xmin, ymin = vtx[0].imag(), ymax = ymin;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    grow(vtx[1].real(), vtx[1].imag());
    grow(vtx[2].real(), vtx[2].imag());
    for (const Arc& a : {arc_between(vtx[0], vtx[2]), arc_between(vtx[1], vtx[2])}) {
        const double t0 = arc_angle(a, a.a), t1 = arc_angle(a, a.b);
        if (std::min(t0, t1) <= 0.5 * std::numbers::pi &&
            0.5 * std::numbers::pi <= std::max(t0, t1))
            grow(a.cx, a.r);
    }
    constexpr double kMargin = 0.08;
    const double dx = std::max(xmax - xmin, 1e-9);
    const double dy = std::max(ymax - ymin, 1e-9);
    SvgMapping m;
    m.s = std::min(width * (1.0 - 2.0 * kMargin) / dx, height * (1.0 - 2.0 * kMargin) / dy);
    m.x0 = width / 2.0 - m.s * 0.5 * (xmin + xmax);
    m.y0 = height / 2.0 + m.s * 0.5 * (ymin + ymax);
    return m;
}

std::string render_svg(const TriangleEmbedding& emb, int width, int height) {
    const SvgMapping m = svg_mapping(emb, width, height);
    auto px = [&](ComplexValue w) { return m.x0 + m.s * w.real(); };
    auto py = [&](ComplexValue w) { return m.y0 - m.s * w.imag(); };

    std::string out;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                  "width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "  <rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"#ffffff\"/>\n",
                  width, height);
    out += buf;
    if (m.y0 >= 0.0 && m.y0 <= height) {
        std::snprintf(buf, sizeof(buf),
                      "  <line x1=\"0\" y1=\"%.3f\" x2=\"%d\" y2=\"%.3f\" "
                      "stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n",
                      m.y0, width, m.y0);
        out += buf;
    }

    const ComplexValue w1 = emb.w1, w2 = emb.w2_embedded, w3 = emb.w3_embedded;
    std::snprintf(buf, sizeof(buf),
                  "  <path d=\"M %.3f,%.3f L %.3f,%.3f\" stroke=\"#2460a7\" "
                  "stroke-width=\"2\" fill=\"none\"/>\n",
                  px(w1), py(w1), px(w2), py(w2));
    out += buf;
    for (const Arc& a : {arc_between(w1, w3), arc_between(w2, w3)}) {
        const double t0 = arc_angle(a, a.a), t1 = arc_angle(a, a.b);
        const int sweep = (t1 < t0) ? 1 : 0;
        std::snprintf(buf, sizeof(buf),
                      "  <path d=\"M %.3f,%.3f A %.3f,%.3f 0 0,%d %.3f,%.3f\" "
                      "stroke=\"#2460a7\" stroke-width=\"2\" fill=\"none\"/>\n",
                      px(a.a), py(a.a), m.s * a.r, m.s * a.r, sweep, px(a.b), py(a.b));
        out += buf;
    }

    const ComplexValue vtx[3] = {w1, w2, w3};
    const char* names[3] = {"w1", "w2", "w3"};
    for (int i = 0; i < 3; ++i) {
        std::snprintf(buf, sizeof(buf),
                      "  <text x=\"%.3f\" y=\"%.3f\" font-family=\"sans-serif\" "
                      "font-size=\"14\" data-w=\"%.17g,%.17g\">%s</text>\n",
                      px(vtx[i]) + 6.0, py(vtx[i]) - 6.0, vtx[i].real(), vtx[i].imag(),
                      names[i]);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace trimap
