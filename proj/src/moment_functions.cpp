#include "hyperzeta/moment_functions.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/gamma.hpp"
#include "hyperzeta/quadrature.hpp"
#include "hyperzeta/series_accel.hpp"
#include "hyperzeta/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperzeta {

namespace {

Complex cpow_real(double base, Complex expo) {
    return std::exp(expo * std::log(base));
}

bool is_star(MomentKind k) {
    return k == MomentKind::SStar || k == MomentKind::CStar || k == MomentKind::TStar;
}

bool near(Complex s, double v, double eps = 1e-12) {
    return std::abs(s - Complex(v, 0.0)) < eps;
}

// head-and-tail summation for monotone positive terms t(n) ~ n^{power-s}:
// explicit head, then the midpoint-rule tail integral over (N-1/2, inf)
// mapped onto (0,1] by n = m/v
Complex monotone_series(const std::function<Complex(double)>& term, double power, Complex s) {
    const int n_head = 4000;
    Complex head{0.0, 0.0};
    for (int n = n_head - 1; n >= 0; --n) head += term(static_cast<double>(n));

    const double m = n_head - 0.5;
    auto mapped = [&term, m](double v) { return term(m / v) / (v * v) * m; };
    // integrand ~ v^{Re(s) - power - 2} near v = 0; integrable for Re(s) > power + 1
    auto tail = integrate_finite(mapped, 0.0, 1.0, {1e-12, 1e-12, 400000});
    const double tprime = std::abs(term(m + 0.5) - term(m - 0.5));
    const double est = tail.abs_error_estimate + tprime / 12.0;
    if (!(est < 1e-9 * std::max(1.0, std::abs(head + tail.value))))
        throw NonConvergence("series_value: tail estimate too large");
    (void)power;
    (void)s;
    return head + tail.value;
}

double binom_ratio_positive(double alpha, std::int64_t n) {
    // C(n+alpha-1, n), computed multiplicatively; positive for alpha > 0
    double b = 1.0;
    for (std::int64_t k = 1; k <= n; ++k)
        b *= (static_cast<double>(k) + alpha - 1.0) / static_cast<double>(k);
    return b;
}

} // namespace

void MomentFunctionKind::validate() const {
    if (is_star(tag)) {
        if (!(alpha > 0.0))
            throw std::domain_error("MomentFunctionKind: alpha must be > 0");
        if (tag == MomentKind::TStar && alpha != std::floor(alpha))
            throw std::domain_error("MomentFunctionKind: TStar requires integer alpha");
    }
}

Complex series_value(MomentFunctionKind kind, Complex s, double a) {
    kind.validate();
    if (!(a > 0.0))
        throw std::domain_error("series_value: requires a > 0");
    const double sigma = s.real();
    const double alpha = kind.alpha;

    switch (kind.tag) {
        case MomentKind::S1: {
            if (!(sigma > 1.0))
                throw std::domain_error("series_value: S1 needs Re(s) > 1");
            const int n_head = 4000;
            Complex acc{0.0, 0.0};
            for (int n = n_head - 1; n >= 0; --n) acc += cpow_real(n + a, -s);
            // midpoint tail: integral of (x+a)^{-s} over (N-1/2, inf)
            const double m = n_head - 0.5 + a;
            acc += cpow_real(m, 1.0 - s) / (s - 1.0);
            return acc;
        }
        case MomentKind::S2: {
            if (!(sigma > 2.0))
                throw std::domain_error("series_value: S2 needs Re(s) > 2");
            const int n_head = 4000;
            Complex acc{0.0, 0.0};
            for (int n = n_head - 1; n >= 1; --n)
                acc += static_cast<double>(n) * cpow_real(n + a, -s);
            const double m = n_head - 0.5 + a;
            acc += cpow_real(m, 2.0 - s) / (s - 2.0) - a * cpow_real(m, 1.0 - s) / (s - 1.0);
            return acc;
        }
        case MomentKind::C1: {
            if (!(sigma > 0.0))
                throw std::domain_error("series_value: C1 needs Re(s) > 0");
            auto term = [s, a](std::int64_t n) { return cpow_real(static_cast<double>(n) + a, -s); };
            return alternating_sum(term, 1e-13, 1e-13).value;
        }
        case MomentKind::C2: {
            if (!(sigma > 1.0))
                throw std::domain_error("series_value: C2 needs Re(s) > 1");
            auto term = [s, a](std::int64_t n) {
                return (static_cast<double>(n) + 1.0) * cpow_real(static_cast<double>(n) + a, -s);
            };
            return alternating_sum(term, 1e-13, 1e-13).value;
        }
        case MomentKind::T1: {
            if (!(sigma > 0.0))
                throw std::domain_error("series_value: T1 needs Re(s) > 0");
            const auto u1 = DistributionSpec::uniform_u1();
            auto term = [&u1, s, a](std::int64_t n) {
                return 2.0 * aux_expectation_neg_power(u1, a + static_cast<double>(n), s);
            };
            return alternating_sum(term, 1e-13, 1e-13).value;
        }
        case MomentKind::T2: {
            if (!(sigma > 1.0))
                throw std::domain_error("series_value: T2 needs Re(s) > 1");
            const auto v = DistributionSpec::triangular_v();
            // sum over n >= 1 of 4 (-1)^{n-1} n E(a-1+n+V)^{-s}
            auto term = [&v, s, a](std::int64_t k) {
                const double n = static_cast<double>(k) + 1.0;
                return 4.0 * n * aux_expectation_neg_power(v, a - 1.0 + n, s);
            };
            return alternating_sum(term, 1e-13, 1e-13).value;
        }
        case MomentKind::SStar: {
            if (!(sigma > alpha + 1.0))
                throw std::domain_error("series_value: SStar summed for Re(s) > alpha + 1");
            auto term = [s, a, alpha](double n) {
                // C(n+alpha-1, n) for real n; complex log-gamma avoids the
                // signgam global of std::lgamma under concurrent evaluation
                const double lb = log_gamma_complex({n + alpha, 0.0}).real() -
                                  log_gamma_complex({alpha, 0.0}).real() -
                                  log_gamma_complex({n + 1.0, 0.0}).real();
                return std::exp(lb) * cpow_real(n + a, -s);
            };
            return monotone_series(term, alpha - 1.0, s);
        }
        case MomentKind::CStar: {
            if (!(sigma > std::floor(alpha)))
                throw std::domain_error("series_value: CStar summed for Re(s) > floor(alpha)");
            auto term = [s, a, alpha](std::int64_t n) {
                return binom_ratio_positive(alpha, n) * cpow_real(static_cast<double>(n) + a, -s);
            };
            return alternating_sum(term, 1e-13, 1e-13, 20000).value;
        }
        case MomentKind::TStar: {
            const int m = static_cast<int>(alpha);
            if (!(sigma > alpha))
                throw std::domain_error("series_value: TStar summed for Re(s) > alpha");
            const auto vm = DistributionSpec::irwin_hall(m);
            const double scale = std::pow(2.0, alpha);
            auto term = [vm, s, a, alpha, scale](std::int64_t n) {
                return scale * binom_ratio_positive(alpha, n) *
                       aux_expectation_neg_power(vm, a + static_cast<double>(n), s);
            };
            return alternating_sum(term, 1e-13, 1e-13, 20000).value;
        }
    }
    throw std::logic_error("series_value: unhandled kind");
}

Complex series_continuation(MomentFunctionKind kind, Complex s, double a) {
    kind.validate();
    if (!(a > 0.0))
        throw std::domain_error("series_continuation: requires a > 0");

    // C1 through the Hurwitz split over even and odd indices
    auto c1 = [](Complex s_, double a_) -> Complex {
        if (near(s_, 1.0, 1e-8)) {
            auto term = [s_, a_](std::int64_t n) {
                return cpow_real(static_cast<double>(n) + a_, -s_);
            };
            return alternating_sum(term, 1e-13, 1e-13).value;
        }
        return cpow_real(2.0, -s_) *
               (hurwitz_zeta(s_, a_ / 2.0) - hurwitz_zeta(s_, (a_ + 1.0) / 2.0));
    };

    switch (kind.tag) {
        case MomentKind::S1:
            return hurwitz_zeta(s, a);
        case MomentKind::S2:
            if (near(s, 2.0))
                throw std::domain_error("series_continuation: S2 has a pole at s = 2");
            return hurwitz_zeta(s - 1.0, a) - a * hurwitz_zeta(s, a);
        case MomentKind::C1:
            return c1(s, a);
        case MomentKind::C2:
            return c1(s - 1.0, a) + (1.0 - a) * c1(s, a);
        case MomentKind::T1: {
            if (near(s, 1.0, 1e-8))
                return series_value(kind, s, a); // the alternating series converges at s = 1
            return 2.0 * (2.0 * c1(s - 1.0, a) - cpow_real(a, 1.0 - s)) / (s - 1.0);
        }
        case MomentKind::T2: {
            if (near(s, 1.0, 1e-8) || near(s, 2.0, 1e-8))
                throw std::domain_error(
                    "series_continuation: T2 closed form carries 1/((s-1)(s-2))");
            const Complex c2m2 = c1(s - 3.0, a) + (1.0 - a) * c1(s - 2.0, a); // C2(s-2, a)
            const Complex c1m2 = c1(s - 2.0, a);
            return 4.0 * (4.0 * c2m2 - 4.0 * c1m2 + cpow_real(a, 2.0 - s)) /
                   ((1.0 - s) * (2.0 - s));
        }
        default:
            throw std::domain_error("series_continuation: no closed continuation for Star kinds");
    }
}

Complex integral_value(MomentFunctionKind kind, Complex s, double a) {
    kind.validate();
    if (!(a > 0.0))
        throw std::domain_error("integral_value: requires a > 0");
    const double alpha = kind.alpha;

    switch (kind.tag) {
        case MomentKind::S1: {
            if (!(a > 0.5))
                throw std::domain_error("integral_value: S1 representation needs a > 1/2");
            if (near(s, 1.0))
                throw std::domain_error("integral_value: S1 has a pole at s = 1");
            const auto law = DistributionSpec::sinh_hat(1, Scale::Half);
            return complex_moment(law, s - 1.0, a - 0.5) / (s - 1.0);
        }
        case MomentKind::S2: {
            if (near(s, 1.0) || near(s, 2.0))
                throw std::domain_error("integral_value: S2 has poles at s = 1, 2");
            const auto law = DistributionSpec::sinh_hat(2, Scale::Half);
            return complex_moment(law, s - 2.0, a) / ((s - 1.0) * (s - 2.0));
        }
        case MomentKind::C1: {
            if (!(a > 0.5))
                throw std::domain_error("integral_value: C1 representation needs a > 1/2");
            const auto law = DistributionSpec::cosh_hat(1, Scale::Half);
            return 0.5 * complex_moment(law, s, a - 0.5);
        }
        case MomentKind::C2: {
            if (!(a > 1.0))
                throw std::domain_error("integral_value: C2 representation needs a > 1");
            const auto law = DistributionSpec::cosh_hat(2, Scale::Half);
            return 0.25 * complex_moment(law, s, a - 1.0);
        }
        case MomentKind::T1:
            return complex_moment(DistributionSpec::tanh_hat(1, Scale::Half), s, a);
        case MomentKind::T2:
            return complex_moment(DistributionSpec::tanh_hat(2, Scale::Half), s, a);
        case MomentKind::SStar: {
            if (!(a > alpha / 2.0))
                throw std::domain_error("integral_value: SStar representation needs a > alpha/2");
            Complex ratio;
            if (alpha == std::floor(alpha)) {
                const int m = static_cast<int>(alpha);
                ratio = {1.0, 0.0};
                for (int j = 1; j <= m; ++j) {
                    const Complex f = s - static_cast<double>(j);
                    if (std::abs(f) < 1e-12)
                        throw std::domain_error("integral_value: SStar pole at integer s <= alpha");
                    ratio /= f;
                }
            } else {
                // Gamma(s-alpha)/Gamma(s); exp cancels any branch offsets
                ratio = std::exp(log_gamma_complex(s - alpha) - log_gamma_complex(s));
            }
            const auto law = DistributionSpec::sinh_hat(alpha, Scale::Half);
            return ratio * complex_moment(law, s - alpha, a - alpha / 2.0);
        }
        case MomentKind::CStar: {
            if (!(a > alpha / 2.0))
                throw std::domain_error("integral_value: CStar representation needs a > alpha/2");
            const auto law = DistributionSpec::cosh_hat(alpha, Scale::Half);
            return std::pow(2.0, -alpha) * complex_moment(law, s, a - alpha / 2.0);
        }
        case MomentKind::TStar: {
            const auto law = DistributionSpec::tanh_hat(alpha, Scale::Half);
            return complex_moment(law, s, a);
        }
    }
    throw std::logic_error("integral_value: unhandled kind");
}

Complex zeta_u2_representation(Complex s, double a) {
    if (!(a >= 1.0))
        throw std::domain_error("zeta_u2_representation: requires a >= 1");
    const auto law = DistributionSpec::sinh_hat(2, Scale::Half);

    // outer integrals over the u-laws at 1e-9, inner complex moments at 1e-10
    auto mixed_u2 = [&law, s, a](double u) {
        return 2.0 * (1.0 - u) * complex_moment(law, s, a - 1.0 + u);
    };
    const Complex first = 0.5 * integrate_finite(mixed_u2, 0.0, 1.0, {1e-9, 1e-9, 600000}).value;
    if (a == 1.0)
        return first;
    auto mixed_u1 = [&law, s](double u) { return complex_moment(law, s, u); };
    const Complex second = integrate_finite(mixed_u1, 0.0, 1.0, {1e-9, 1e-9, 600000}).value;
    return first + (a - 1.0) * second;
}

Complex gen_bernoulli(Complex s, double a, BernoulliRoute route) {
    switch (route) {
        case BernoulliRoute::Functional:
            if (!(a > 0.5))
                throw std::domain_error("gen_bernoulli: requires a > 1/2");
            return gen_bernoulli_functional(s, a);
        case BernoulliRoute::Moment: {
            if (!(a > 0.5))
                throw std::domain_error("gen_bernoulli: requires a > 1/2");
            const auto law = DistributionSpec::sinh_hat(1, Scale::Half);
            return complex_moment(law, -s, a - 0.5); // E(a-1/2+iX)^{+s}
        }
        case BernoulliRoute::Mixture: {
            if (!(a >= 1.0))
                throw std::domain_error("gen_bernoulli: mixture route requires a >= 1");
            const auto law = DistributionSpec::sinh_hat(2, Scale::Half);
            auto mixed_u2 = [&law, s, a](double u) {
                return 2.0 * (1.0 - u) * complex_moment(law, 1.0 - s, a - 1.0 + u);
            };
            const Complex first =
                0.5 * integrate_finite(mixed_u2, 0.0, 1.0, {1e-9, 1e-9, 600000}).value;
            if (a == 1.0)
                return first;
            auto mixed_u1 = [&law, s](double u) { return complex_moment(law, 1.0 - s, u); };
            const Complex second =
                integrate_finite(mixed_u1, 0.0, 1.0, {1e-9, 1e-9, 600000}).value;
            return first + (a - 1.0) * second;
        }
    }
    throw std::logic_error("gen_bernoulli: unhandled route");
}

std::pair<Complex, Complex> mellin_h_identity(Complex s, double a) {
    if (!(a >= 1.0))
        throw std::domain_error("mellin_h_identity: requires a >= 1");
    if (!(s.real() > 0.0))
        throw std::domain_error("mellin_h_identity: requires Re(s) > 0");
    const auto h = DistributionSpec::density_h(a);
    auto w = [&h](double x) { return Complex(pdf(h, x), 0.0); };
    const Complex lhs = mellin_halfline(w, s, {1e-10, 1e-10, 2000000}, 0.7 * a).value;
    Complex rhs;
    if (near(s, 1.0))
        rhs = {1.0, 0.0}; // continuity at the zeta pole
    else
        rhs = (s - 1.0) * gamma_complex(s) * hurwitz_zeta(s, a);
    return {lhs, rhs};
}

std::pair<double, double> logistic_moment_identity(double s, double a) {
    if (!(a > 0.5))
        throw std::domain_error("logistic_moment_identity: requires a > 1/2");
    if (!(s > -1.0))
        throw SingularityError("logistic_moment_identity: diverges for s <= -1");
    const auto g = DistributionSpec::density_g(a);
    const double lhs = abs_moment(g, s);

    Complex c1;
    if (std::abs(s - 1.0) < 1e-8 && a == 1.0)
        c1 = dirichlet_eta({1.0, 0.0});
    else
        c1 = series_continuation({MomentKind::C1, 1.0}, {s, 0.0}, a);
    const double rhs = 2.0 * std::exp(log_gamma_complex({s + 1.0, 0.0}).real()) * c1.real();
    return {lhs, rhs};
}

} // namespace hyperzeta
