#include "trimap/group_algebra.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <numbers>
#include <string>

namespace trimap {
namespace {

using Rational = boost::rational<long long>;

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

void require_not_integer(const Rational& r, const char* name) {
    if (r.denominator() == 1)
        throw DegenerateParams(std::string(name) + " is an integer for this signature");
}

std::string cplx_str(ComplexValue z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

}  // namespace

Signature validate_signature(int n1, int n2, int n3, bool allow_order_two) {
    const int lo = allow_order_two ? 2 : 3;
    for (int n : {n1, n2, n3}) {
        if (n < lo)
            throw OrderTooSmall("order " + std::to_string(n) + " < " + std::to_string(lo) +
                                " in signature (" + std::to_string(n1) + "," +
                                std::to_string(n2) + "," + std::to_string(n3) + ")");
    }
    // 1/n1 + 1/n2 + 1/n3 < 1 exactly, in integers.
    const long long a = n1, b = n2, c = n3;
    if (b * c + a * c + a * b >= a * b * c)
        throw NotHyperbolic("1/" + std::to_string(n1) + "+1/" + std::to_string(n2) + "+1/" +
                            std::to_string(n3) + " >= 1");
    return Signature{n1, n2, n3};
}

HypParams params_from_signature(const Signature& sig) {
    const Rational p1(1, sig.n1), p2(1, sig.n2), p3(1, sig.n3);
    const Rational alpha = (1 - p1 - p2 - p3) / 2;
    const Rational beta = (1 - p1 - p2 + p3) / 2;
    const Rational gamma_ = 1 - p1;
    const Rational alpha_p = alpha - gamma_ + 1;
    const Rational beta_p = beta - gamma_ + 1;
    const Rational gamma_p = 2 - gamma_;

    require_not_integer(alpha, "alpha");
    require_not_integer(beta, "beta");
    require_not_integer(gamma_, "gamma");
    require_not_integer(alpha_p, "alpha'");
    require_not_integer(beta_p, "beta'");
    require_not_integer(gamma_p, "gamma'");

    HypParams p;
    p.alpha = to_double(alpha);
    p.beta = to_double(beta);
    p.gamma_ = to_double(gamma_);
    p.alpha_p = to_double(alpha_p);
    p.beta_p = to_double(beta_p);
    p.gamma_p = to_double(gamma_p);
    p.sig = sig;
    return p;
}

MoebiusElement::MoebiusElement(ComplexValue a_, ComplexValue b_, ComplexValue c_, ComplexValue d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const ComplexValue det = a * d - b * c;
    if (std::abs(det - 1.0) > 1e-12)
        throw DomainError("Moebius determinant " + cplx_str(det) + " != 1");
    if (is_real()) {
        for (ComplexValue* e : {&a, &b, &c, &d}) {
            if (std::abs(e->real()) > 1e-12) {
                if (e->real() < 0.0) {
                    a = -a; b = -b; c = -c; d = -d;
                }
                break;
            }
        }
    }
}

bool MoebiusElement::is_real(double tol) const {
    return std::abs(a.imag()) <= tol && std::abs(b.imag()) <= tol &&
           std::abs(c.imag()) <= tol && std::abs(d.imag()) <= tol;
}

const char* to_string(ElementClass cls) {
    switch (cls) {
        case ElementClass::Identity: return "Identity";
        case ElementClass::Parabolic: return "Parabolic";
        case ElementClass::Elliptic: return "Elliptic";
        case ElementClass::Hyperbolic: return "Hyperbolic";
        case ElementClass::Loxodromic: return "Loxodromic";
    }
    return "?";
}

ElementClass classify_element(const MoebiusElement& m) {
    const double tol = 1e-12;
    // +-I first, before any trace test.
    for (double s : {1.0, -1.0}) {
        if (std::abs(m.a - s) <= tol && std::abs(m.b) <= tol && std::abs(m.c) <= tol &&
            std::abs(m.d - s) <= tol)
            return ElementClass::Identity;
    }
    const ComplexValue tr = m.a + m.d;
    if (std::abs(tr.imag()) > tol) return ElementClass::Loxodromic;
    const double t = std::abs(tr.real());
    if (std::abs(t - 2.0) <= tol) return ElementClass::Parabolic;
    return t < 2.0 ? ElementClass::Elliptic : ElementClass::Hyperbolic;
}

MoebiusElement elliptic_generator(ComplexValue w1, int n) {
    if (!(w1.imag() > 0.0))
        throw DomainError("elliptic fixed point must satisfy Im w1 > 0, got " + cplx_str(w1));
    if (n < 2) throw OrderTooSmall("elliptic order " + std::to_string(n) + " < 2");
    const double x = w1.real(), y = w1.imag();
    const double th = std::numbers::pi / double(n);
    const double co = std::cos(th), si = std::sin(th);
    // (s, x/s; 0, 1/s) R(pi/n) (1/s, -x/s; 0, s) with s = sqrt(y), expanded.
    return MoebiusElement(ComplexValue(co - x * si / y, 0.0),
                          ComplexValue(si * (x * x + y * y) / y, 0.0),
                          ComplexValue(-si / y, 0.0),
                          ComplexValue(co + x * si / y, 0.0));
}

ComplexValue moebius_apply(const MoebiusElement& m, ComplexValue w) {
    const ComplexValue den = m.c * w + m.d;
    const double scale = std::abs(m.c) * std::abs(w) + std::abs(m.d);
    if (std::abs(den) <= 1e-15 * scale)
        throw PoleError("Moebius action pole at w = " + cplx_str(w));
    return (m.a * w + m.b) / den;
}

}  // namespace trimap
