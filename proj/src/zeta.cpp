#include "hyperzeta/zeta.hpp"

#include "hyperzeta/bernoulli.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/series_accel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperzeta {

namespace {

using Complex = std::complex<double>;

Complex real_pow(double base, Complex expo) {
    // base^expo for base > 0
    return std::exp(expo * std::log(base));
}

} // namespace

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
    if (!(a > 0.0))
        throw std::domain_error("hurwitz_zeta: requires a > 0");
    if (s == Complex(1.0, 0.0))
        throw std::domain_error("hurwitz_zeta: pole at s = 1");

    // At s = -k the Euler-Maclaurin sum collapses under catastrophic
    // cancellation; the exact value -B_{k+1}(a)/(k+1) avoids it.
    if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real() &&
        s.real() >= -60.0) {
        const int k = static_cast<int>(-s.real());
        return Complex(-bernoulli_polynomial(k + 1, a) / (k + 1.0), 0.0);
    }

    const int kCorrections = 12;
    int n_terms = std::max(10, static_cast<int>(std::ceil(std::abs(s))) + 10);

    for (int attempt = 0; attempt < 3; ++attempt) {
        Complex sum{0.0, 0.0};
        for (int n = 0; n < n_terms; ++n)
            sum += real_pow(n + a, -s);

        const double m = n_terms + a;
        sum += real_pow(m, 1.0 - s) / (s - 1.0);
        sum += 0.5 * real_pow(m, -s);

        // Euler-Maclaurin: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * m^{-s-2k+1}
        Complex rising{1.0, 0.0}; // s(s+1)...(s+2k-2)
        double factorial_2k = 1.0;
        Complex power = real_pow(m, -s - 1.0);
        const double inv_m2 = 1.0 / (m * m);
        for (int k = 1; k <= kCorrections; ++k) {
            rising *= (k == 1) ? s : (s + Complex(2.0 * k - 3.0)) * (s + Complex(2.0 * k - 2.0));
            factorial_2k *= (2.0 * k) * (2.0 * k - 1.0);
            if (k > 1) power *= inv_m2;
            sum += bernoulli_number(2 * k) / factorial_2k * rising * power;
        }

        // first-omitted-term monitor; widen the series if the expansion has
        // not begun to converge at this depth
        const Complex next_rising = rising * (s + Complex(2.0 * kCorrections - 1.0)) *
                                    (s + Complex(2.0 * kCorrections));
        const double next_fact = factorial_2k * (2.0 * kCorrections + 1.0) * (2.0 * kCorrections + 2.0);
        const double omitted = std::abs(bernoulli_number(2 * kCorrections + 2) / next_fact *
                                        next_rising * power) * inv_m2;
        if (omitted <= 1e-13 * std::max(1.0, std::abs(sum)) || n_terms > 4000)
            return sum;
        n_terms *= 4;
    }
    throw NonConvergence("hurwitz_zeta: Euler-Maclaurin tail did not settle");
}

std::complex<double> riemann_zeta(std::complex<double> s) {
    return hurwitz_zeta(s, 1.0);
}

std::complex<double> dirichlet_eta(std::complex<double> s) {
    if (s == Complex(1.0, 0.0))
        return Complex(std::numbers::ln2, 0.0);
    return (1.0 - real_pow(2.0, 1.0 - s)) * riemann_zeta(s);
}

std::complex<double> dirichlet_beta(std::complex<double> s) {
    if (!(s.real() > 0.0))
        throw NonConvergence("dirichlet_beta: implemented for Re(s) > 0 only");
    auto term = [s](std::int64_t n) { return real_pow(2.0 * static_cast<double>(n) + 1.0, -s); };
    return alternating_sum(term, 1e-14, 1e-14).value;
}

std::complex<double> gen_bernoulli_functional(std::complex<double> s, double a) {
    if (!(a > 0.0))
        throw std::domain_error("gen_bernoulli_functional: requires a > 0");
    if (s == Complex(0.0, 0.0))
        return Complex(1.0, 0.0); // residue limit at the zeta pole
    return -s * hurwitz_zeta(1.0 - s, a);
}

} // namespace hyperzeta
