#include "hyperzeta/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperzeta {

namespace {

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set).
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178; // ln(2*pi)/2

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

} // namespace

std::complex<double> log_gamma_complex(std::complex<double> z) {
    using std::numbers::pi;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("log_gamma_complex: non-finite argument");
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma_complex: pole at non-positive integer");

    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = ln(pi) - log sin(pi z) - log Gamma(1-z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_complex(1.0 - z);
    }

    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> x = kCoef[0];
    for (int i = 1; i < 9; ++i)
        x += kCoef[i] / (zm1 + static_cast<double>(i));
    const std::complex<double> t = zm1 + kG + 0.5;
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

std::complex<double> gamma_complex(std::complex<double> z) {
    return std::exp(log_gamma_complex(z));
}

} // namespace hyperzeta
