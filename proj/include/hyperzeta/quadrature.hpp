#pragma once

#include <complex>
#include <functional>

namespace hyperzeta {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct ToleranceSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    long max_evaluations = 2000000;
};

struct QuadratureResult {
    std::complex<double> value{};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Tail description for fourier_cosine_halfline: either |g| <= C e^{-rate*u}
// eventually, or g(u) ~ C u^{-power} with exponentially small corrections.
struct CosineTail {
    enum class Kind { Exponential, Polynomial };
    Kind kind;
    double rate_or_power;
    static CosineTail exponential(double rate) { return {Kind::Exponential, rate}; }
    static CosineTail polynomial(double power) { return {Kind::Polynomial, power}; }
};

// Adaptive Gauss-Kronrod (7-15) over (lo, hi). Open rule: endpoints are never
// evaluated, so integrable endpoint singularities are allowed.
QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const ToleranceSpec& tol);

// Integral over (0, inf) of an eventually exponentially decaying integrand:
// |f(x)| <= C e^{-decay_hint*x}. C is estimated by sampling; the domain is
// truncated where the implied tail bound drops below abs_tol/2. Throws
// NonConvergence when the sampled magnitudes contradict the decay hint.
QuadratureResult integrate_halfline_decaying(const Integrand& f, const ToleranceSpec& tol,
                                             double decay_hint);

// Whole-line integral computed as the folded half-line integral of
// f(x) + f(-x); decay_hint as above.
QuadratureResult integrate_real_line_symmetric(const Integrand& f, const ToleranceSpec& tol,
                                               double decay_hint);

// Mellin transform: integral over (0, inf) of x^{s-1} w(x) for Re(s) > 0 and
// exponentially decaying w. For Re(s) < 1 the endpoint weight is removed by
// the substitution u = x^{Re s} near zero.
QuadratureResult mellin_halfline(const Integrand& w, std::complex<double> s,
                                 const ToleranceSpec& tol, double decay_hint);

// (1/pi) * integral over (0, inf) of cos(x*u) g(u) du. Exponential tails are
// truncated like integrate_halfline_decaying; polynomial tails are summed
// between consecutive zeros of the cosine with alternating-series
// acceleration. Throws SingularityError for x = 0 with power <= 1.
QuadratureResult fourier_cosine_halfline(const Integrand& g, double x,
                                         const ToleranceSpec& tol, CosineTail tail);

} // namespace hyperzeta
