#pragma once

#include "hyperzeta/complex_power.hpp"
#include "hyperzeta/quadrature.hpp"

#include <cstdint>
#include <vector>

namespace hyperzeta {

enum class Family {
    SinhHat,       // cf (theta/sinh theta)^order
    CoshHat,       // cf (1/cosh theta)^order
    TanhHat,       // cf (tanh theta / theta)^order
    Logistic,      // standard logistic, F(x) = 1/(1+e^{-x})
    UniformU1,     // uniform on (0,1)
    TriangularU2,  // density 2(1-u) on (0,1)
    TriangularV,   // triangular on (0,2)
    IrwinHall,     // sum of `order` iid uniforms on (0,1)
    DensityH,      // h_a on (0,inf), a_param >= 1
    DensityG,      // g_a on R, a_param > 1/2
    StdNormal,
    GammaLaw,      // shape `order`, unit rate
};

// Half means X = Y/2 for Y the full-scale law, i.e. pdf_half(x) = 2 pdf_full(2x).
enum class Scale { Full, Half };

struct DistributionSpec {
    Family family = Family::SinhHat;
    double order = 1.0;
    Scale scale = Scale::Full;
    double a_param = 1.0;

    static DistributionSpec sinh_hat(double order, Scale scale = Scale::Full);
    static DistributionSpec cosh_hat(double order, Scale scale = Scale::Full);
    static DistributionSpec tanh_hat(double order, Scale scale = Scale::Full);
    static DistributionSpec logistic();
    static DistributionSpec uniform_u1();
    static DistributionSpec triangular_u2();
    static DistributionSpec triangular_v();
    static DistributionSpec irwin_hall(int n);
    static DistributionSpec density_h(double a);
    static DistributionSpec density_g(double a);
    static DistributionSpec std_normal();
    static DistributionSpec gamma_law(double alpha);

    void validate() const; // throws std::domain_error on invariant violations
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    DistributionSpec spec;
};

// Density; closed forms where available, characteristic-function inversion
// otherwise (cached tabulation for the smooth inversion families).
// Throws SingularityError at x = 0 for TanhHat with order <= 1 and
// std::domain_error outside the support of one-sided laws.
double pdf(const DistributionSpec& spec, double x);

// Same value as pdf() for the inversion families, but always evaluated by
// quadrature, bypassing the tabulation cache (used for cross-route checks).
double pdf_by_inversion(const DistributionSpec& spec, double x,
                        double abs_tol = 1e-11);

// The unit-interval integral form of the sinh/tanh densities (the inversion
// integral transported to (0,1) by y = e^{-u}), kept as an independent
// evaluation route. Requires order > 1 for TanhHat.
double pdf_unit_interval_form(const DistributionSpec& spec, double x);

// Characteristic function; real-valued (symmetric laws and the three
// hyperbolic families only).
double cf(const DistributionSpec& spec, double theta);

// E X^{2m} for m = 0..max_m from the power-series expansion of the cf.
std::vector<double> even_moments(const DistributionSpec& spec, int max_m);

double cdf(const DistributionSpec& spec, double x);

// Deterministic inverse-CDF sampling: same (spec, seed, n) gives identical
// values. Tabulated CDF with monotone cubic interpolation and bisection.
SampleBatch sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

// h_X(s, a) = E (a+iX)^{-s}. For symmetric laws the whole-line integral is
// folded onto (0, inf). Throws std::domain_error for a <= 0.
Complex complex_moment(const DistributionSpec& spec, Complex s, double a);

// The cosine rewrite 2 * integral of cos(s atan(x/a)) (a^2+x^2)^{-s/2} dF(x),
// valid for real s and symmetric laws; must agree with complex_moment.
Complex complex_moment_cosine(const DistributionSpec& spec, double s, double a);

// E |X|^s; s > -1. For the logistic law this matches 2 Gamma(s+1) eta(s).
double abs_moment(const DistributionSpec& spec, double s);

// E (c + W)^{-s} in closed finite-difference form for W uniform on (0,1),
// triangular on (0,2), Irwin-Hall, or the 2(1-u) law; removable integer
// values of s handled by their logarithmic limits. Requires c > 0.
Complex aux_expectation_neg_power(const DistributionSpec& aux, double c, Complex s);

bool is_symmetric(const DistributionSpec& spec);

// exponential decay rate lambda with pdf(x) = O(e^{-lambda |x|}), used to
// steer tail truncation in quadratures over the law
double pdf_decay_rate(const DistributionSpec& spec);

} // namespace hyperzeta
