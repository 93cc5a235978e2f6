#pragma once

#include <complex>

namespace hyperzeta {

// Hurwitz zeta by truncated series plus Euler-Maclaurin corrections; accurate
// to ~1e-12 relative for |s| <= 30 and a in (0, 10]. Throws std::domain_error
// for a <= 0 and at the pole s = 1.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

// hurwitz_zeta(s, 1): same code path.
std::complex<double> riemann_zeta(std::complex<double> s);

// (1 - 2^{1-s}) zeta(s); entire, equals ln 2 at s = 1 by continuity.
std::complex<double> dirichlet_eta(std::complex<double> s);

// sum (-1)^n (2n+1)^{-s} with alternating-series acceleration; Re(s) > 0.
std::complex<double> dirichlet_beta(std::complex<double> s);

// -s * zeta(1-s, a); returns 1 at s = 0 (the residue limit of the pole).
std::complex<double> gen_bernoulli_functional(std::complex<double> s, double a);

} // namespace hyperzeta
