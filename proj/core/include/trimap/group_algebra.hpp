#pragma once

#include "trimap/special_functions.hpp"

namespace trimap {

// Elliptic orders of the group; hyperbolicity 1/n1 + 1/n2 + 1/n3 < 1.
struct Signature {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
};

// Orders of 2 sit on degenerate half-integer parameter lines; they are
// rejected unless explicitly allowed, and nothing downstream is validated
// for them.
Signature validate_signature(int n1, int n2, int n3, bool allow_order_two = false);

// Hypergeometric exponents: alpha_p = alpha - gamma_ + 1, beta_p likewise,
// gamma_p = 2 - gamma_; 1 - gamma_ = 1/n1, gamma_ - alpha - beta = 1/n2,
// beta - alpha = 1/n3. Derived exactly in rational arithmetic, exported as
// doubles.
struct HypParams {
    double alpha = 0;
    double beta = 0;
    double gamma_ = 0;
    double alpha_p = 0;
    double beta_p = 0;
    double gamma_p = 0;
    Signature sig;
};

HypParams params_from_signature(const Signature& sig);

// Unit-determinant 2x2 matrix acting on the half-plane. Entries may be
// complex for classification purposes; real matrices are sign-normalized so
// the first nonzero entry of (a,b,c,d) is positive.
struct MoebiusElement {
    ComplexValue a, b, c, d;
    MoebiusElement(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d);
    bool is_real(double tol = 1e-12) const;
};

enum class ElementClass { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

const char* to_string(ElementClass cls);

ElementClass classify_element(const MoebiusElement& m);

// Generator of the order-n rotation stabilizer of w1: the rotation matrix
// (cos pi/n, sin pi/n; -sin pi/n, cos pi/n) conjugated by the map i -> w1.
MoebiusElement elliptic_generator(ComplexValue w1, int n);

ComplexValue moebius_apply(const MoebiusElement& m, ComplexValue w);

}  // namespace trimap
