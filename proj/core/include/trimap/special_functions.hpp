#pragma once

#include <complex>

#include "trimap/errors.hpp"

namespace trimap {

using ComplexValue = std::complex<double>;

struct SeriesConfig {
    int max_terms = 2000;
    double tol = 1e-14;  // relative truncation tolerance, must be < 1e-8
};

// Gamma(z) for complex z, Lanczos approximation plus reflection for Re z < 0.5.
// Throws PoleError within 1e-14 of a non-positive integer.
ComplexValue gamma(ComplexValue z);

// Gamma on the real line; exact zero imaginary part by construction.
double gamma_real(double x);

// 1/Gamma(z); entire, returns 0 at the poles of Gamma instead of throwing.
ComplexValue recip_gamma(ComplexValue z);

// Principal-branch power exp(e*log(u)), cut along (-infty,0]; u = 0 maps to
// 0 for Re e > 0 and to 1 for e = 0, and is a DomainError otherwise.
ComplexValue cpow(ComplexValue u, ComplexValue e);
ComplexValue cpow(ComplexValue u, double e);

// Gaussian hypergeometric function, analytically continued to C \ [1,+infty).
// xi = 1 is admitted when Re(c-a-b) > 0 and yields the Gauss value.
// The continuation assumes the non-logarithmic situation (c, c-a-b, a-b all
// away from the integers) whenever a connection formula is required.
ComplexValue hyp2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue xi,
                    const SeriesConfig& cfg = {});

// Direct series summation; requires |xi| < 1 (or a terminating series).
ComplexValue hyp2f1_series(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue xi,
                           const SeriesConfig& cfg = {});

// d/dxi 2F1(a,b;c;xi) via the contiguous relation (ab/c) 2F1(a+1,b+1;c+1;xi).
ComplexValue hyp2f1_deriv(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue xi,
                          const SeriesConfig& cfg = {});

}  // namespace trimap
