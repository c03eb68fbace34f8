#include <cctype>
#include <cerrno>
#include <clocale>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "trimap/sampling.hpp"
#include "trimap/svg.hpp"
#include "trimap/verify.hpp"

namespace {

using trimap::ComplexValue;

std::string fmt17(double x) {
    char b[40];
    std::snprintf(b, sizeof(b), "%.17g", x);
    return b;
}

std::string fmtc(ComplexValue z) {
    char b[96];
    std::snprintf(b, sizeof(b), "%.17g%+.17gi", z.real(), z.imag());
    return b;
}

std::string jesc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            o += '\\';
            o += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char b[8];
            std::snprintf(b, sizeof(b), "\\u%04x", c);
            o += b;
        } else {
            o += c;
        }
    }
    return o;
}

double parse_double_full(const std::string& t) {
    if (t.empty())
        throw std::invalid_argument("empty numeric literal");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE)
        throw std::invalid_argument("bad numeric literal: " + t);
    return v;
}

// Accepts a, bi, a+bi, a-bi with optional signs and exponents; i alone means 1i.
ComplexValue parse_complex(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I')
        return {parse_double_full(s), 0.0};
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        const char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re_part = (split == std::string::npos) ? "" : s.substr(0, split);
    std::string im_part = (split == std::string::npos) ? s : s.substr(split);
    if (im_part.empty() || im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    const double re = re_part.empty() ? 0.0 : parse_double_full(re_part);
    return {re, parse_double_full(im_part)};
}

trimap::Signature parse_signature(const std::string& text) {
    long v[3];
    size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const size_t comma = text.find(',', start);
        const bool last = (i == 2);
        if (last != (comma == std::string::npos))
            throw std::invalid_argument("signature must be n1,n2,n3");
        const std::string part =
            text.substr(start, last ? std::string::npos : comma - start);
        if (part.empty())
            throw std::invalid_argument("signature must be n1,n2,n3");
        errno = 0;
        char* end = nullptr;
        v[i] = std::strtol(part.c_str(), &end, 10);
        if (end != part.c_str() + part.size() || errno == ERANGE)
            throw std::invalid_argument("bad signature component: " + part);
        start = comma + 1;
    }
    return trimap::validate_signature(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                      static_cast<int>(v[2]));
}

struct SigArgs {
    std::string pos, opt;

    trimap::Signature resolve() const {
        if (!pos.empty() && !opt.empty() && pos != opt)
            throw std::invalid_argument("conflicting positional and --sig signatures");
        const std::string& s = opt.empty() ? pos : opt;
        if (s.empty())
            throw std::invalid_argument("missing signature (positional or --sig)");
        return parse_signature(s);
    }
};

void add_sig(CLI::App* sub, SigArgs& sa) {
    sub->add_option("signature", sa.pos, "signature as n1,n2,n3");
    sub->add_option("--sig", sa.opt, "signature as n1,n2,n3");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::fwrite(text.data(), 1, text.size(), stdout);
    else
        trimap::write_text_file(out_path, text);
}

std::string sig_str(const trimap::Signature& s) {
    char b[48];
    std::snprintf(b, sizeof(b), "%d,%d,%d", s.n1, s.n2, s.n3);
    return b;
}

int cmd_params(const trimap::Signature& sig, bool json) {
    const trimap::HypParams p = trimap::params_from_signature(sig);
    const double k = trimap::constant_K(p);
    const trimap::TriangleVertices tv = trimap::vertices(p);
    const ComplexValue lim = trimap::vertex_w3_limit(p);
    if (json) {
        std::string s = "{\"signature\":\"" + sig_str(sig) + "\"";
        s += ",\"alpha\":" + fmt17(p.alpha) + ",\"beta\":" + fmt17(p.beta) +
             ",\"gamma\":" + fmt17(p.gamma_) + ",\"alpha_p\":" + fmt17(p.alpha_p) +
             ",\"beta_p\":" + fmt17(p.beta_p) + ",\"gamma_p\":" + fmt17(p.gamma_p) +
             ",\"K\":" + fmt17(k) + ",\"w2\":" + fmt17(tv.w2.real()) +
             ",\"w3_printed_re\":" + fmt17(tv.w3.real()) +
             ",\"w3_printed_im\":" + fmt17(tv.w3.imag()) +
             ",\"w3_limit_re\":" + fmt17(lim.real()) +
             ",\"w3_limit_im\":" + fmt17(lim.imag()) + "}\n";
        std::fwrite(s.data(), 1, s.size(), stdout);
    } else {
        std::printf("signature    %s\n", sig_str(sig).c_str());
        std::printf("alpha        %s\n", fmt17(p.alpha).c_str());
        std::printf("beta         %s\n", fmt17(p.beta).c_str());
        std::printf("gamma        %s\n", fmt17(p.gamma_).c_str());
        std::printf("alpha'       %s\n", fmt17(p.alpha_p).c_str());
        std::printf("beta'        %s\n", fmt17(p.beta_p).c_str());
        std::printf("gamma'       %s\n", fmt17(p.gamma_p).c_str());
        std::printf("K            %s\n", fmt17(k).c_str());
        std::printf("w2           %s\n", fmt17(tv.w2.real()).c_str());
        std::printf("w3_printed   %s\n", fmtc(tv.w3).c_str());
        std::printf("w3_limit     %s\n", fmtc(lim).c_str());
    }
    return 0;
}

int cmd_eval(const trimap::Signature& sig, const std::string& xi_str,
             const std::string& w_str, bool json) {
    if (xi_str.empty() == w_str.empty())
        throw std::invalid_argument("eval needs exactly one of --xi or --w");
    const trimap::HypParams p = trimap::params_from_signature(sig);
    const trimap::TriangleEmbedding emb = trimap::build_embedding(p);
    ComplexValue xi, w;
    if (!xi_str.empty()) {
        xi = parse_complex(xi_str);
        w = trimap::uniformizer_w(emb, xi);
    } else {
        w = parse_complex(w_str);
        xi = trimap::invert_xi_sector(emb, w);
    }
    const ComplexValue dxi = trimap::dxi_dw_closed(emb, xi);
    if (json) {
        std::string s = "{\"signature\":\"" + sig_str(sig) + "\"";
        s += ",\"xi_re\":" + fmt17(xi.real()) + ",\"xi_im\":" + fmt17(xi.imag()) +
             ",\"w_re\":" + fmt17(w.real()) + ",\"w_im\":" + fmt17(w.imag()) +
             ",\"dxidw_re\":" + fmt17(dxi.real()) +
             ",\"dxidw_im\":" + fmt17(dxi.imag()) + "}\n";
        std::fwrite(s.data(), 1, s.size(), stdout);
    } else {
        std::printf("signature    %s\n", sig_str(sig).c_str());
        std::printf("xi           %s\n", fmtc(xi).c_str());
        std::printf("w            %s\n", fmtc(w).c_str());
        std::printf("dxi/dw       %s\n", fmtc(dxi).c_str());
    }
    return 0;
}

int cmd_verify(const trimap::Signature& sig, const std::string& suite, bool json) {
    std::optional<double> tol;
    if (const char* env = std::getenv("TRIMAP_TOL")) {
        tol = parse_double_full(env);
        if (!(*tol > 0.0))
            throw std::invalid_argument("TRIMAP_TOL must be positive");
    }
    const trimap::VerifyReport rep = trimap::run_verify(sig, suite, tol);
    size_t npass = 0;
    for (const auto& c : rep.checks)
        npass += c.pass ? 1 : 0;
    if (json) {
        std::string s = "{\"signature\":\"" + sig_str(sig) + "\",\"suite\":\"" +
                        jesc(suite) + "\",\"all_pass\":" +
                        (rep.all_pass() ? "true" : "false") + ",\"checks\":[";
        for (size_t i = 0; i < rep.checks.size(); ++i) {
            const auto& c = rep.checks[i];
            if (i)
                s += ",";
            s += "{\"name\":\"" + jesc(c.name) + "\",\"pass\":" +
                 (c.pass ? "true" : "false") +
                 ",\"max_residual\":" + fmt17(c.max_residual) +
                 ",\"tolerance\":" + fmt17(c.tolerance) + ",\"note\":\"" +
                 jesc(c.note) + "\"}";
        }
        s += "]}\n";
        std::fwrite(s.data(), 1, s.size(), stdout);
    } else {
        std::printf("suite '%s' for signature %s\n\n", suite.c_str(),
                    sig_str(sig).c_str());
        std::printf("%-22s %-6s %-11s %-11s %s\n", "check", "status", "residual",
                    "tolerance", "note");
        for (const auto& c : rep.checks)
            std::printf("%-22s %-6s %-11.3e %-11.3e %s\n", c.name.c_str(),
                        c.pass ? "PASS" : "FAIL", c.max_residual, c.tolerance,
                        c.note.c_str());
        std::printf("\n%zu/%zu checks passed\n", npass, rep.checks.size());
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_sample(const trimap::Signature& sig, int rows, int cols,
               const std::string& format, const std::string& out) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    if (format != "csv" && format != "jsonl")
        throw std::invalid_argument("format must be csv or jsonl");
    const trimap::TriangleEmbedding emb =
        trimap::build_embedding(trimap::params_from_signature(sig));
    const std::vector<trimap::MapSample> samples = trimap::sample_grid(emb, rows, cols);
    emit(format == "csv" ? trimap::format_csv(sig, rows, cols, samples)
                         : trimap::format_jsonl(sig, rows, cols, samples),
         out);
    return 0;
}

int cmd_svg(const trimap::Signature& sig, int width, int height,
            const std::string& out) {
    if (width < 16 || height < 16)
        throw std::invalid_argument("viewport must be at least 16x16");
    const trimap::TriangleEmbedding emb =
        trimap::build_embedding(trimap::params_from_signature(sig));
    emit(trimap::render_svg(emb, width, height), out);
    return 0;
}

int fail(const char* msg, int code) {
    std::fprintf(stderr, "trimap: %s\n", msg);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"hyperbolic triangle group uniformization toolkit"};
    app.require_subcommand(1);

    SigArgs params_sig;
    bool params_json = false;
    CLI::App* c_params = app.add_subcommand("params", "derived parameters and constants");
    add_sig(c_params, params_sig);
    c_params->add_flag("--json", params_json, "machine readable output");

    SigArgs eval_sig;
    std::string eval_xi, eval_w;
    bool eval_json = false;
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate the map and its derivative");
    add_sig(c_eval, eval_sig);
    c_eval->add_option("--xi", eval_xi, "evaluate at xi (a+bi)");
    c_eval->add_option("--w", eval_w, "invert at w (a+bi)");
    c_eval->add_flag("--json", eval_json, "machine readable output");

    SigArgs verify_sig;
    std::string verify_suite = "all";
    bool verify_json = false;
    CLI::App* c_verify = app.add_subcommand("verify", "run identity check suites");
    add_sig(c_verify, verify_sig);
    c_verify->add_option("--suite", verify_suite,
                         "gamma|hyp|geometry|derivative|automorphy|all");
    c_verify->add_flag("--json", verify_json, "machine readable output");

    SigArgs sample_sig;
    int sample_rows = 8, sample_cols = 8;
    std::string sample_format = "csv", sample_out;
    CLI::App* c_sample = app.add_subcommand("sample", "write a grid of map samples");
    add_sig(c_sample, sample_sig);
    c_sample->add_option("--rows", sample_rows, "grid rows (Im direction)");
    c_sample->add_option("--cols", sample_cols, "grid cols (Re direction)");
    c_sample->add_option("--format", sample_format, "csv or jsonl");
    c_sample->add_option("--out", sample_out, "output path (default stdout)");

    SigArgs svg_sig;
    int svg_width = 800, svg_height = 600;
    std::string svg_out;
    CLI::App* c_svg = app.add_subcommand("svg", "render the fundamental triangle");
    add_sig(c_svg, svg_sig);
    c_svg->add_option("--width", svg_width, "viewport width in px");
    c_svg->add_option("--height", svg_height, "viewport height in px");
    c_svg->add_option("--out", svg_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_params)
            return cmd_params(params_sig.resolve(), params_json);
        if (*c_eval)
            return cmd_eval(eval_sig.resolve(), eval_xi, eval_w, eval_json);
        if (*c_verify)
            return cmd_verify(verify_sig.resolve(), verify_suite, verify_json);
        if (*c_sample)
            return cmd_sample(sample_sig.resolve(), sample_rows, sample_cols,
                              sample_format, sample_out);
        if (*c_svg)
            return cmd_svg(svg_sig.resolve(), svg_width, svg_height, svg_out);
    } catch (const trimap::NotHyperbolic& e) {
        return fail(e.what(), 2);
    } catch (const trimap::OrderTooSmall& e) {
        return fail(e.what(), 2);
    } catch (const trimap::DegenerateParams& e) {
        return fail(e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return fail(e.what(), 2);
    } catch (const trimap::OutsideFundamentalDomain& e) {
        return fail(e.what(), 3);
    } catch (const trimap::BranchCutError& e) {
        return fail(e.what(), 3);
    } catch (const trimap::PoleError& e) {
        return fail(e.what(), 3);
    } catch (const trimap::ZeroDenominator& e) {
        return fail(e.what(), 3);
    } catch (const trimap::DomainError& e) {
        return fail(e.what(), 3);
    } catch (const trimap::ConvergenceError& e) {
        return fail(e.what(), 4);
    } catch (const trimap::NoConvergence& e) {
        return fail(e.what(), 4);
    } catch (const trimap::IoError& e) {
        return fail(e.what(), 5);
    } catch (const std::exception& e) {
        return fail(e.what(), 70);
    }
    return 2;
}
