#pragma once

#include <complex>

namespace hyperzeta {

using Complex = std::complex<double>;

// Base a+ix restricted to the open right half-plane (a > 0), where the
// principal logarithm is unambiguous: theta = atan(x/a) in (-pi/2, pi/2).
struct BranchedBase {
    double a;
    double x;
};

// (a+ix)^{-s} = exp(-s * (0.5*ln(a^2+x^2) + i*theta)) on the principal branch.
// Throws std::domain_error for a <= 0 or non-finite input, std::overflow_error
// when the real part of the exponent exceeds the representable range.
Complex complex_pow_principal(BranchedBase base, Complex s);

// Closed-form modulus (a^2+x^2)^{-sigma/2} * e^{t*theta} for s = sigma + it.
double complex_pow_principal_modulus(BranchedBase base, Complex s);

} // namespace hyperzeta
