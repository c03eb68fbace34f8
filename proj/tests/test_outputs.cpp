#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "trimap/sampling.hpp"
#include "trimap/svg.hpp"
#include "trimap/verify.hpp"

namespace {

trimap::HypParams params(int a, int b, int c) {
    return trimap::params_from_signature(trimap::validate_signature(a, b, c));
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

TEST(SampleGrid, LayoutAndConsistency) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    const auto rows = trimap::sample_grid(e, 4, 4);
    ASSERT_EQ(rows.size(), 16u);
    // Row-major with row index slow: the first four records share a row.
    EXPECT_DOUBLE_EQ(rows[0].xi.imag(), rows[1].xi.imag());
    EXPECT_DOUBLE_EQ(rows[0].xi.imag(), rows[3].xi.imag());
    EXPECT_LT(rows[0].xi.real(), rows[1].xi.real());
    EXPECT_LT(rows[0].xi.imag(), rows[4].xi.imag());
    for (const auto& r : rows) {
        EXPECT_GT(r.xi.real(), 0.0);
        EXPECT_LT(r.xi.real(), 1.0);
        EXPECT_GT(r.xi.imag(), 0.0);
        EXPECT_LT(r.xi.imag(), 1.0);
        EXPECT_NEAR(std::abs(trimap::uniformizer_w(e, r.xi) - r.w), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(trimap::dxi_dw_closed(e, r.xi) - r.dxi_dw), 0.0, 1e-10);
    }
    EXPECT_THROW(trimap::sample_grid(e, 0, 3), trimap::DomainError);
    EXPECT_THROW(trimap::sample_grid(e, 3, -1), trimap::DomainError);
}

TEST(SampleGrid, HazardCellReportsHonestFailure) {
    // A 4x3 grid puts a cell center at 0.5+0.875i, inside the slow-convergence
    // crown around exp(i pi/3) where every series family needs >2000 terms.
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    EXPECT_THROW(trimap::sample_grid(e, 4, 3), trimap::ConvergenceError);
}

TEST(SampleFormat, CsvHeaderAndShape) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    const auto rows = trimap::sample_grid(e, 2, 2);
    const std::string csv = trimap::format_csv(e.params.sig, 2, 2, rows);
    std::istringstream in(csv);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, "# trimap sample signature=3,3,4 grid=2x2");
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, "w_re,w_im,xi_re,xi_im,dxidw_re,dxidw_im");
    int data_lines = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++data_lines;
            EXPECT_EQ(count_occurrences(line, ","), 5u);
        }
    }
    EXPECT_EQ(data_lines, 4);
}

TEST(SampleFormat, JsonlHeaderAndShape) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    const auto rows = trimap::sample_grid(e, 2, 3);
    const std::string jsonl = trimap::format_jsonl(e.params.sig, 2, 3, rows);
    std::istringstream in(jsonl);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_NE(line.find("\"signature\":\"3,3,4\""), std::string::npos);
    EXPECT_NE(line.find("\"grid\":\"2x3\""), std::string::npos);
    EXPECT_NE(line.find("\"records\":6"), std::string::npos);
    int data_lines = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++data_lines;
            EXPECT_EQ(line.front(), '{');
            EXPECT_EQ(line.back(), '}');
            EXPECT_NE(line.find("\"w_re\":"), std::string::npos);
            EXPECT_NE(line.find("\"dxidw_im\":"), std::string::npos);
        }
    }
    EXPECT_EQ(data_lines, 6);
}

TEST(SampleFormat, Deterministic) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 4, 5));
    const auto a = trimap::format_csv(e.params.sig, 3, 3, trimap::sample_grid(e, 3, 3));
    const auto b = trimap::format_csv(e.params.sig, 3, 3, trimap::sample_grid(e, 3, 3));
    EXPECT_EQ(a, b);
}

TEST(WriteTextFile, RoundTripAndErrors) {
    const std::string path = ::testing::TempDir() + "/trimap_out_test.txt";
    const std::string payload = "line1\nline2\n";
    trimap::write_text_file(path, payload);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), payload);
    std::remove(path.c_str());
    EXPECT_THROW(trimap::write_text_file("/nonexistent-dir-xyz/out.txt", payload),
                 trimap::IoError);
}

TEST(Svg, MappingKeepsVerticesInView) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    const trimap::SvgMapping m = trimap::svg_mapping(e, 800, 600);
    for (const auto& v : {e.w1, e.w2_embedded, e.w3_embedded}) {
        const double px = m.x0 + m.s * v.real();
        const double py = m.y0 - m.s * v.imag();
        EXPECT_GE(px, 0.0);
        EXPECT_LE(px, 800.0);
        EXPECT_GE(py, 0.0);
        EXPECT_LE(py, 600.0);
    }
    EXPECT_THROW(trimap::svg_mapping(e, 8, 600), trimap::DomainError);
}

TEST(Svg, DocumentStructure) {
    const trimap::TriangleEmbedding e = trimap::build_embedding(params(3, 3, 4));
    const std::string svg = trimap::render_svg(e, 800, 600);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    EXPECT_EQ(count_occurrences(svg, "<path "), 3u);
    EXPECT_EQ(count_occurrences(svg, "<text "), 3u);
    EXPECT_NE(svg.find("data-w=\"0,1\""), std::string::npos);
    EXPECT_NE(svg.find(">w1<"), std::string::npos);
    EXPECT_NE(svg.find(">w3<"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    // Deterministic output.
    EXPECT_EQ(svg, trimap::render_svg(e, 800, 600));
}

TEST(Verify, AllSuitePassesAtDefaultTolerances) {
    const trimap::VerifyReport r =
        trimap::run_verify(trimap::validate_signature(3, 3, 4), "all");
    EXPECT_TRUE(r.all_pass()) << [&] {
        std::string s;
        for (const auto& c : r.checks) {
            if (!c.pass) {
                s += c.name + " residual=" + std::to_string(c.max_residual) + "; ";
            }
        }
        return s;
    }();
    EXPECT_GE(r.checks.size(), 15u);
}

TEST(Verify, SuiteFiltersChecks) {
    const trimap::Signature s = trimap::validate_signature(3, 3, 4);
    const trimap::VerifyReport gamma = trimap::run_verify(s, "gamma");
    bool has_reflection = false;
    for (const auto& c : gamma.checks) {
        if (c.name == "gamma_reflection") has_reflection = true;
        EXPECT_EQ(c.name.find("automorphy"), std::string::npos);
    }
    EXPECT_TRUE(has_reflection);

    const trimap::VerifyReport geom = trimap::run_verify(s, "geometry");
    bool has_sides = false;
    for (const auto& c : geom.checks) {
        if (c.name == "side_sine_identity") has_sides = true;
    }
    EXPECT_TRUE(has_sides);
}

TEST(Verify, UnknownSuiteThrows) {
    EXPECT_THROW(trimap::run_verify(trimap::validate_signature(3, 3, 4), "bogus"),
                 std::invalid_argument);
    EXPECT_THROW(trimap::run_verify(trimap::validate_signature(3, 3, 4), "all", -1.0),
                 std::invalid_argument);
}

TEST(Verify, ToleranceOverrideForcesFailure) {
    const trimap::VerifyReport r =
        trimap::run_verify(trimap::validate_signature(3, 3, 4), "gamma", 1e-30);
    EXPECT_FALSE(r.all_pass());
    for (const auto& c : r.checks) {
        EXPECT_DOUBLE_EQ(c.tolerance, 1e-30);
    }
}

}  // namespace
