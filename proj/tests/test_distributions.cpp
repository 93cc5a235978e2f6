#include "doctest.h"

#include "hyperzeta/distributions.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/gamma.hpp"
#include "hyperzeta/quadrature.hpp"
#include "hyperzeta/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace hyperzeta;
using std::numbers::pi;

namespace {
const ToleranceSpec kTol{1e-10, 1e-10, 2000000};

Complex cpow(double base, Complex expo) { return std::exp(expo * std::log(base)); }

double integrate_pdf(const DistributionSpec& spec) {
    auto f = [&spec](double x) {
        try {
            return Complex(pdf(spec, x), 0.0);
        } catch (const std::domain_error&) {
            return Complex(0.0, 0.0);
        }
    };
    if (is_symmetric(spec))
        return integrate_real_line_symmetric(f, {1e-9, 1e-9, 4000000}, 0.7 * pdf_decay_rate(spec))
            .value.real();
    return integrate_halfline_decaying(f, {1e-9, 1e-9, 4000000}, 0.7 * pdf_decay_rate(spec))
        .value.real();
}
} // namespace

TEST_CASE("pdf: closed-form spot values") {
    CHECK(pdf(DistributionSpec::sinh_hat(1, Scale::Half), 0.0) ==
          doctest::Approx(pi / 2.0).epsilon(1e-14));
    // order-2 sinh density at the guarded origin limit
    CHECK(pdf(DistributionSpec::sinh_hat(2, Scale::Half), 0.0) ==
          doctest::Approx(pi / 3.0).epsilon(1e-12));
    CHECK(pdf(DistributionSpec::sinh_hat(2, Scale::Half), 1e-5) ==
          doctest::Approx(pi / 3.0).epsilon(1e-8));
    // cosh order 1 full scale: psi_1(x) = 1 / (2 cosh(pi x / 2))
    for (double x : {0.0, 0.4, 1.3, 3.0})
        CHECK(pdf(DistributionSpec::cosh_hat(1, Scale::Full), x) ==
              doctest::Approx(1.0 / (2.0 * std::cosh(pi * x / 2.0))).epsilon(1e-12));
    // h_1(1) = e^{-2} / (1-e^{-1})^2
    const double e1 = std::exp(-1.0);
    CHECK(pdf(DistributionSpec::density_h(1.0), 1.0) ==
          doctest::Approx(e1 * e1 / ((1.0 - e1) * (1.0 - e1))).epsilon(1e-13));
    // h_a(0+) -> a - 1/2
    CHECK(pdf(DistributionSpec::density_h(1.5), 1e-9) == doctest::Approx(1.0).epsilon(1e-7));
    // g_1 is the logistic density
    for (double x : {0.0, 0.7, -2.0})
        CHECK(pdf(DistributionSpec::density_g(1.0), x) ==
              doctest::Approx(pdf(DistributionSpec::logistic(), x)).epsilon(1e-13));
}

TEST_CASE("pdf: tanh singularities and domain errors") {
    CHECK_THROWS_AS(pdf(DistributionSpec::tanh_hat(1, Scale::Half), 0.0), SingularityError);
    CHECK_THROWS_AS(pdf(DistributionSpec::tanh_hat(0.5, Scale::Full), 0.0), SingularityError);
    CHECK_NOTHROW(pdf(DistributionSpec::tanh_hat(2, Scale::Half), 0.0));
    CHECK_THROWS_AS(pdf(DistributionSpec::density_h(1.0), -1.0), std::domain_error);
    CHECK_THROWS_AS(pdf(DistributionSpec::density_h(0.5), 1.0), std::domain_error);
    CHECK_THROWS_AS(pdf(DistributionSpec::gamma_law(1.0), 0.0), std::domain_error);
    const DistributionSpec bad_ih{Family::IrwinHall, 2.5};
    CHECK_THROWS_AS(bad_ih.validate(), std::domain_error);
}

TEST_CASE("pdf: scale consistency pdf_half(x) = 2 pdf_full(2x)") {
    for (double x : {0.2, 0.9, 2.5}) {
        for (auto fam : {Family::SinhHat, Family::CoshHat, Family::TanhHat})
            for (double order : {1.0, 2.0}) {
                DistributionSpec half{fam, order, Scale::Half};
                DistributionSpec full{fam, order, Scale::Full};
                CHECK(pdf(half, x) == doctest::Approx(2.0 * pdf(full, 2.0 * x)).epsilon(1e-10));
            }
        DistributionSpec half{Family::CoshHat, 2.7, Scale::Half};
        DistributionSpec full{Family::CoshHat, 2.7, Scale::Full};
        CHECK(pdf(half, x) == doctest::Approx(2.0 * pdf(full, 2.0 * x)).epsilon(1e-10));
    }
}

TEST_CASE("pdf: inversion route matches the closed forms") {
    // phi_1 against the order-1 sinh density at full scale
    for (double x : {0.0, 0.5, 2.0}) {
        const double closed = pdf(DistributionSpec::sinh_hat(1, Scale::Full), x);
        const double inv = pdf_by_inversion(DistributionSpec::sinh_hat(1, Scale::Full), x);
        CHECK(inv == doctest::Approx(closed).epsilon(1e-9));
    }
    // phi_2 against the order-2 closed density
    for (double x : {0.1, 0.75, 1.5}) {
        const double closed = pdf(DistributionSpec::sinh_hat(2, Scale::Half), x);
        const double inv =
            2.0 * pdf_by_inversion(DistributionSpec::sinh_hat(2, Scale::Full), 2.0 * x);
        CHECK(inv == doctest::Approx(closed).epsilon(1e-8));
    }
    // psi_2(x) = x / (2 sinh(pi x / 2))
    for (double x : {0.3, 1.1}) {
        CHECK(pdf(DistributionSpec::cosh_hat(2, Scale::Full), x) ==
              doctest::Approx(x / (2.0 * std::sinh(pi * x / 2.0))).epsilon(1e-12));
        const double inv = pdf_by_inversion(DistributionSpec::cosh_hat(2, Scale::Full), x);
        CHECK(inv == doctest::Approx(x / (2.0 * std::sinh(pi * x / 2.0))).epsilon(1e-8));
    }
    // eta_1 against the order-1 tanh closed density
    for (double x : {0.4, 1.0}) {
        const double closed = pdf(DistributionSpec::tanh_hat(1, Scale::Full), x);
        const double inv = pdf_by_inversion(DistributionSpec::tanh_hat(1, Scale::Full), x);
        CHECK(inv == doctest::Approx(closed).epsilon(1e-7));
    }
    // eta_2 against the order-2 integral density
    for (double x : {0.0, 0.5, 1.2}) {
        const double closed = pdf(DistributionSpec::tanh_hat(2, Scale::Half), x);
        const double inv =
            2.0 * pdf_by_inversion(DistributionSpec::tanh_hat(2, Scale::Full), 2.0 * x);
        CHECK(std::abs(inv - closed) < 1e-6);
    }
    // cached sinh table agrees with a fresh inversion at non-closed order
    for (double x : {0.0, 0.8, 3.0}) {
        const double cached = pdf(DistributionSpec::sinh_hat(1.5, Scale::Full), x);
        const double fresh = pdf_by_inversion(DistributionSpec::sinh_hat(1.5, Scale::Full), x);
        CHECK(std::abs(cached - fresh) < 2e-9);
    }
}

TEST_CASE("pdf: unit-interval integral forms agree with the cosine forms") {
    for (double alpha : {0.5, 1.5, 2.0})
        for (double x : {0.3, 1.0}) {
            const auto spec = DistributionSpec::sinh_hat(alpha, Scale::Full);
            CHECK(std::abs(pdf_unit_interval_form(spec, x) - pdf_by_inversion(spec, x)) < 1e-8);
        }
    for (double alpha : {1.5, 2.0, 3.0})
        for (double x : {0.3, 1.0}) {
            const auto spec = DistributionSpec::tanh_hat(alpha, Scale::Full);
            CHECK(std::abs(pdf_unit_interval_form(spec, x) - pdf_by_inversion(spec, x)) < 1e-8);
        }
    CHECK_THROWS_AS(pdf_unit_interval_form(DistributionSpec::tanh_hat(0.5, Scale::Full), 1.0),
                    std::domain_error);
}

TEST_CASE("pdf: normalization across the families") {
    CHECK(integrate_pdf(DistributionSpec::sinh_hat(1, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::sinh_hat(2, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::cosh_hat(1, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::cosh_hat(2, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::cosh_hat(0.5, Scale::Full)) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::tanh_hat(1, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(integrate_pdf(DistributionSpec::tanh_hat(2, Scale::Half)) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(integrate_pdf(DistributionSpec::logistic()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_pdf(DistributionSpec::density_h(1.5)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::density_g(0.75)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_pdf(DistributionSpec::gamma_law(2.5)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cf: values and the cf round trip") {
    CHECK(cf(DistributionSpec::sinh_hat(1, Scale::Half), 0.0) == 1.0);
    CHECK(cf(DistributionSpec::tanh_hat(2, Scale::Half), 0.0) == 1.0);
    CHECK(cf(DistributionSpec::sinh_hat(1, Scale::Half), 1.0) ==
          doctest::Approx(0.5 / std::sinh(0.5)).epsilon(1e-14));
    // order-2 half-scale tanh small-theta curvature 1 - theta^2/6 (variance 1/3)
    const double th = 1e-3;
    CHECK(cf(DistributionSpec::tanh_hat(2, Scale::Half), th) ==
          doctest::Approx(1.0 - th * th / 6.0).epsilon(1e-9));

    // quadrature round trip against closed-form densities
    for (double theta : {0.0, 0.5, 1.0, 2.0, 5.0})
        for (auto spec : {DistributionSpec::sinh_hat(1, Scale::Half),
                          DistributionSpec::sinh_hat(2, Scale::Half),
                          DistributionSpec::cosh_hat(1, Scale::Half),
                          DistributionSpec::cosh_hat(2, Scale::Half),
                          DistributionSpec::logistic()}) {
            auto f = [&spec, theta](double x) {
                return Complex(std::cos(theta * x) * pdf(spec, x), 0.0);
            };
            auto r = integrate_real_line_symmetric(f, {1e-9, 1e-9, 4000000},
                                                   0.7 * pdf_decay_rate(spec));
            CHECK(std::abs(r.value.real() - cf(spec, theta)) < 1e-7);
        }
    CHECK_THROWS_AS(cf(DistributionSpec::uniform_u1(), 1.0), std::domain_error);
}

TEST_CASE("even moments from the cf power series") {
    auto m_s1 = even_moments(DistributionSpec::sinh_hat(1, Scale::Half), 3);
    CHECK(m_s1[1] == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    auto m_c1 = even_moments(DistributionSpec::cosh_hat(1, Scale::Half), 2);
    CHECK(m_c1[1] == doctest::Approx(0.25).epsilon(1e-13));
    auto m_t1 = even_moments(DistributionSpec::tanh_hat(1, Scale::Half), 2);
    CHECK(m_t1[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    auto m_t2 = even_moments(DistributionSpec::tanh_hat(2, Scale::Half), 2);
    CHECK(m_t2[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    auto m_log = even_moments(DistributionSpec::logistic(), 3);
    CHECK(m_log[1] == doctest::Approx(pi * pi / 3.0).epsilon(1e-13));
    auto m_n = even_moments(DistributionSpec::std_normal(), 4);
    CHECK(m_n[2] == doctest::Approx(3.0));
    CHECK(m_n[4] == doctest::Approx(105.0));

    // quadrature cross-check of E X^2 and E X^4 for one law
    const auto spec = DistributionSpec::cosh_hat(2, Scale::Half);
    auto mom = even_moments(spec, 2);
    for (int m : {1, 2}) {
        auto f = [&spec, m](double x) {
            return Complex(std::pow(x, 2.0 * m) * pdf(spec, x), 0.0);
        };
        auto r = integrate_real_line_symmetric(f, kTol, 0.7 * pdf_decay_rate(spec));
        CHECK(r.value.real() == doctest::Approx(mom[static_cast<std::size_t>(m)]).epsilon(1e-9));
    }
}

TEST_CASE("cdf: closed values, symmetry, logistic scaling law") {
    CHECK(cdf(DistributionSpec::logistic(), 0.0) == 0.5);
    CHECK(cdf(DistributionSpec::sinh_hat(1, Scale::Half), 0.0) == 0.5);
    CHECK(cdf(DistributionSpec::cosh_hat(2, Scale::Half), 0.0) == 0.5);
    // cdf(Logistic, x) = cdf(S1/2, x / (2 pi))
    for (double x : {-3.0, -0.5, 0.4, 2.0})
        CHECK(cdf(DistributionSpec::logistic(), x) ==
              doctest::Approx(cdf(DistributionSpec::sinh_hat(1, Scale::Half), x / (2.0 * pi)))
                  .epsilon(1e-12));
    // numeric route is monotone with the right limits
    const auto t2 = DistributionSpec::tanh_hat(2, Scale::Half);
    double prev = 0.0;
    for (double x : {-8.0, -1.0, -0.3, 0.0, 0.3, 1.0, 8.0}) {
        const double c = cdf(t2, x);
        CHECK(c >= prev - 1e-12);
        prev = c;
    }
    CHECK(cdf(t2, -40.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(cdf(t2, 40.0) == doctest::Approx(1.0).epsilon(1e-9));
    // closed cosh cdf against numeric integration
    const auto c1 = DistributionSpec::cosh_hat(1, Scale::Half);
    auto f = [&c1](double t) { return Complex(pdf(c1, t), 0.0); };
    auto r = integrate_finite(f, 0.0, 1.3, kTol);
    CHECK(cdf(c1, 1.3) == doctest::Approx(0.5 + r.value.real()).epsilon(1e-10));
}

TEST_CASE("complex moment: trivial and derived values") {
    const auto s1h = DistributionSpec::sinh_hat(1, Scale::Half);
    // s = 0 -> 1 for any law
    CHECK(std::abs(complex_moment(s1h, {0.0, 0.0}, 0.5) - Complex(1.0, 0.0)) < 1e-10);
    // E(1/2 + iX) = 1/2 by symmetry
    CHECK(complex_moment(s1h, {-1.0, 0.0}, 0.5).real() == doctest::Approx(0.5).epsilon(1e-10));
    // E(1/2 + iX)^2 = 1/4 - 1/12 = 1/6
    CHECK(complex_moment(s1h, {-2.0, 0.0}, 0.5).real() ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(std::abs(complex_moment(s1h, {-2.0, 0.0}, 0.5).imag()) < 1e-10);
    CHECK_THROWS_AS(complex_moment(s1h, {1.0, 0.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(complex_moment(s1h, {1.0, 0.0}, -2.0), std::domain_error);
}

TEST_CASE("complex moment: cosine route agrees with the fold") {
    for (auto spec : {DistributionSpec::sinh_hat(1, Scale::Half),
                      DistributionSpec::cosh_hat(2, Scale::Half),
                      DistributionSpec::tanh_hat(1, Scale::Half),
                      DistributionSpec::std_normal()})
        for (double s : {-1.5, 0.5, 2.0, 3.5})
            for (double a : {0.6, 1.0, 3.0}) {
                const Complex direct = complex_moment(spec, {s, 0.0}, a);
                const Complex cosine = complex_moment_cosine(spec, s, a);
                CHECK(std::abs(direct - cosine) <= 1e-8 * std::max(1.0, std::abs(direct)));
                CHECK(std::abs(direct.imag()) < 1e-9); // real for real s
            }
}

TEST_CASE("complex moment: cf-kernel representation agrees with the fold") {
    // at a moderate shift both routes are well conditioned; verify equality
    const auto spec = DistributionSpec::sinh_hat(2, Scale::Half);
    for (Complex s : {Complex(2.6, 0.0), Complex(4.0, 0.5)}) {
        auto w = [&spec](double t) { return Complex(std::exp(-0.2 * t) * cf(spec, t), 0.0); };
        const Complex kernel = mellin_halfline(w, s, {1e-11, 1e-11, 2000000}, 1.2).value /
                               gamma_complex(s);
        const Complex fold = complex_moment(spec, s, 0.2);
        CHECK(std::abs(kernel - fold) < 1e-8);
    }
    // the tiny-shift branch stays consistent across the route threshold
    const Complex near_lo = complex_moment(spec, {3.5, 0.0}, 0.0999);
    const Complex near_hi = complex_moment(spec, {3.5, 0.0}, 0.1001);
    CHECK(std::abs(near_lo - near_hi) < 1e-3 * std::abs(near_lo));
}

TEST_CASE("abs moment: logistic closed form") {
    const auto logi = DistributionSpec::logistic();
    CHECK(abs_moment(logi, 1.0) == doctest::Approx(2.0 * std::numbers::ln2).epsilon(1e-10));
    CHECK(abs_moment(logi, 2.0) == doctest::Approx(pi * pi / 3.0).epsilon(1e-10));
    CHECK(abs_moment(logi, 3.0) == doctest::Approx(9.0 * 1.2020569031595943).epsilon(1e-10));
    // continuity with the eta expression at general s
    for (double s : {-0.5, 0.5, 1.5}) {
        const double want = 2.0 * std::exp(log_gamma_complex({s + 1.0, 0.0}).real()) *
                            dirichlet_eta({s, 0.0}).real();
        CHECK(abs_moment(logi, s) == doctest::Approx(want).epsilon(1e-9));
    }
    CHECK_THROWS_AS(abs_moment(logi, -1.0), SingularityError);
}

TEST_CASE("aux expectations: closed finite differences vs quadrature") {
    const auto u1 = DistributionSpec::uniform_u1();
    const auto v = DistributionSpec::triangular_v();
    const auto u2 = DistributionSpec::triangular_u2();
    // integral over (0,1) of (1+u)^{-2} = 1/2
    CHECK(aux_expectation_neg_power(u1, 1.0, {2.0, 0.0}).real() ==
          doctest::Approx(0.5).epsilon(1e-13));
    // zeroth power is 1
    CHECK(aux_expectation_neg_power(v, 1.0, {0.0, 0.0}).real() ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(aux_expectation_neg_power(u2, 0.7, {0.0, 0.0}).real() ==
          doctest::Approx(1.0).epsilon(1e-13));
    // removable point, order 1: E(c+U)^{-1} = ln((c+1)/c)
    CHECK(aux_expectation_neg_power(u1, 2.0, {1.0, 0.0}).real() ==
          doctest::Approx(std::log(1.5)).epsilon(1e-12));

    // quadrature oracles across laws and exponents, including removable s
    for (Complex s : {Complex(3.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                      Complex(0.5, 1.0), Complex(-1.5, 0.0)})
        for (double c : {0.4, 1.0, 2.5})
            for (auto aux : {u1, v, u2, DistributionSpec::irwin_hall(3)}) {
                const Complex closed = aux_expectation_neg_power(aux, c, s);
                auto f = [&aux, c, s](double u) {
                    const double d = pdf(aux, u);
                    if (d == 0.0) return Complex(0.0, 0.0);
                    return cpow(c + u, -s) * d;
                };
                const double hi = aux.family == Family::TriangularV
                                      ? 2.0
                                      : (aux.family == Family::IrwinHall ? aux.order : 1.0);
                const Complex oracle = integrate_finite(f, 0.0, hi, kTol).value;
                CHECK(std::abs(closed - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
            }
    CHECK_THROWS_AS(aux_expectation_neg_power(u1, 0.0, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(aux_expectation_neg_power(u1, -1.0, {1.0, 0.0}), std::domain_error);
}
