#include "trimap/sampling.hpp"

#include <cstdio>
#include <fstream>

namespace trimap {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::vector<MapSample> sample_grid(const TriangleEmbedding& emb, int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw DomainError("sample_grid: grid dimensions must be positive");
    std::vector<MapSample> out;
    out.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            MapSample s;
            s.xi = ComplexValue((c + 0.5) / cols, (r + 0.5) / rows);
            s.w = uniformizer_w(emb, s.xi);
            s.dxi_dw = dxi_dw_closed(emb, s.xi);
            out.push_back(s);
        }
    }
    return out;
}

std::string format_csv(const Signature& sig, int rows, int cols,
                       const std::vector<MapSample>& samples) {
    std::string out;
    char head[96];
    std::snprintf(head, sizeof(head), "# trimap sample signature=%d,%d,%d grid=%dx%d\n",
                  sig.n1, sig.n2, sig.n3, rows, cols);
    out += head;
    out += "w_re,w_im,xi_re,xi_im,dxidw_re,dxidw_im\n";
    for (const MapSample& s : samples) {
        out += fmt17(s.w.real()) + "," + fmt17(s.w.imag()) + "," + fmt17(s.xi.real()) +
               "," + fmt17(s.xi.imag()) + "," + fmt17(s.dxi_dw.real()) + "," +
               fmt17(s.dxi_dw.imag()) + "\n";
    }
    return out;
}

std::string format_jsonl(const Signature& sig, int rows, int cols,
                         const std::vector<MapSample>& samples) {
    std::string out;
    char head[120];
    std::snprintf(head, sizeof(head),
                  "{\"signature\":\"%d,%d,%d\",\"grid\":\"%dx%d\",\"records\":%zu}\n",
                  sig.n1, sig.n2, sig.n3, rows, cols, samples.size());
    out += head;
    for (const MapSample& s : samples) {
        out += "{\"w_re\":" + fmt17(s.w.real()) + ",\"w_im\":" + fmt17(s.w.imag()) +
               ",\"xi_re\":" + fmt17(s.xi.real()) + ",\"xi_im\":" + fmt17(s.xi.imag()) +
               ",\"dxidw_re\":" + fmt17(s.dxi_dw.real()) +
               ",\"dxidw_im\":" + fmt17(s.dxi_dw.imag()) + "}\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f)
        throw IoError("short write to " + path);
}

}  // namespace trimap
