#include "hyperzeta/complex_power.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperzeta {

Complex complex_pow_principal(BranchedBase base, Complex s) {
    if (!(base.a > 0.0))
        throw std::domain_error("complex_pow_principal: base requires a > 0");
    if (!std::isfinite(base.a) || !std::isfinite(base.x) ||
        !std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw std::domain_error("complex_pow_principal: non-finite input");

    const double log_mod = 0.5 * std::log(base.a * base.a + base.x * base.x);
    const double theta = std::atan(base.x / base.a);
    const Complex w = -s * Complex(log_mod, theta);
    if (w.real() > 709.0)
        throw std::overflow_error("complex_pow_principal: exponent overflow");
    return std::exp(w);
}

double complex_pow_principal_modulus(BranchedBase base, Complex s) {
    if (!(base.a > 0.0))
        throw std::domain_error("complex_pow_principal_modulus: base requires a > 0");
    const double log_mod = 0.5 * std::log(base.a * base.a + base.x * base.x);
    const double theta = std::atan(base.x / base.a);
    return std::exp(-s.real() * log_mod + s.imag() * theta);
}

} // namespace hyperzeta
