#pragma once

#include <complex>

namespace hyperzeta {

// Principal-branch log Gamma, accurate to ~14 significant digits for |z| <= 50.
// Throws std::domain_error at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma_complex(std::complex<double> z);

// exp(log_gamma_complex(z)); branch-insensitive where only the value matters.
std::complex<double> gamma_complex(std::complex<double> z);

} // namespace hyperzeta
