#pragma once

#include <string>

#include "trimap/automorphic_map.hpp"

namespace trimap {

// Pixel transform px = x0 + s*x, py = y0 - s*y.
struct SvgMapping {
    double x0 = 0.0, y0 = 0.0, s = 1.0;
};

// Fit of the triangle (vertices plus arc crowns) into the viewport with an
// 8 percent margin on each side.
SvgMapping svg_mapping(const TriangleEmbedding& emb, int width, int height);

// SVG 1.1 document with exactly three path elements (the sides) and three
// vertex labels carrying data-w="re,im" at full precision.
std::string render_svg(const TriangleEmbedding& emb, int width = 800, int height = 600);

}  // namespace trimap
