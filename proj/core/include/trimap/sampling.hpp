#pragma once

#include <string>
#include <vector>

#include "trimap/automorphic_map.hpp"

namespace trimap {

// Cell-center grid over the unit square: xi = ((c+0.5)/cols, (r+0.5)/rows),
// row-major with r as the slow index.
std::vector<MapSample> sample_grid(const TriangleEmbedding& emb, int rows, int cols);

// One comment line, one header line, then %.17g fields; byte-stable.
std::string format_csv(const Signature& sig, int rows, int cols,
                       const std::vector<MapSample>& samples);

// Header object with record count, then one flat object per sample.
std::string format_jsonl(const Signature& sig, int rows, int cols,
                         const std::vector<MapSample>& samples);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace trimap
