#include "hyperzeta/distributions.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/gamma.hpp"
#include "hyperzeta/series_accel.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hyperzeta {

namespace {

using std::numbers::pi;

constexpr ToleranceSpec kPdfTol{1e-11, 1e-11, 2000000};
constexpr ToleranceSpec kMomentTol{1e-10, 1e-10, 2000000};

Complex cpow_real(double base, Complex expo) {
    return std::exp(expo * std::log(base));
}

// ---- guarded elementary kernels ------------------------------------------

double u_over_sinh(double u) {
    u = std::abs(u);
    if (u < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + 7.0 * u2 * u2 / 360.0;
    }
    const double s = std::sinh(u);
    return std::isinf(s) ? 0.0 : u / s;
}

double tanh_over_u(double u) {
    u = std::abs(u);
    if (u < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 3.0 + 2.0 * u2 * u2 / 15.0;
    }
    return std::tanh(u) / u;
}

// (-ln y) / (1 - y^2) on (0,1), removable at y = 1
double log_ratio_unit(double y) {
    const double d = 1.0 - y;
    if (std::abs(d) < 1e-4)
        return 0.5 * (1.0 + d + (5.0 / 6.0) * d * d);
    return -std::log(y) / (1.0 - y * y);
}

double x_minus_1_plus_exp(double x) {
    // x - 1 + e^{-x}, stable near 0
    if (x < 1e-3) {
        const double x2 = x * x;
        return x2 / 2.0 - x2 * x / 6.0 + x2 * x2 / 24.0 - x2 * x2 * x / 120.0;
    }
    return x - 1.0 + std::exp(-x);
}

// ---- closed-form half-scale hyperbolic densities (order 1 and 2) ----------

double sinh_half_pdf_1(double x) {
    const double c = std::cosh(pi * x);
    return std::isinf(c) ? 0.0 : pi / (2.0 * c * c);
}

double sinh_half_pdf_2(double x) {
    const double z = pi * std::abs(x);
    if (z < 1e-3)
        return pi * (1.0 / 3.0 - 2.0 * z * z / 15.0);
    const double s = std::sinh(z);
    if (std::isinf(s)) return 0.0;
    return pi * (z * std::cosh(z) / s - 1.0) / (s * s);
}

double cosh_half_pdf_1(double x) {
    const double c = std::cosh(pi * x);
    return std::isinf(c) ? 0.0 : 1.0 / c;
}

double cosh_half_pdf_2(double x) {
    const double z = pi * std::abs(x);
    if (z < 1e-4)
        return (2.0 / pi) * (1.0 - z * z / 6.0);
    const double s = std::sinh(z);
    return std::isinf(s) ? 0.0 : 2.0 * std::abs(x) / s;
}

double tanh_half_pdf_1(double x) {
    const double z = pi * std::abs(x) / 2.0;
    if (z == 0.0)
        throw SingularityError("pdf: tanh density of order 1 diverges at x = 0");
    if (z > 20.0)
        return (2.0 / pi) * 2.0 * std::exp(-2.0 * z); // ln coth(z) ~ 2 e^{-2z}
    return (2.0 / pi) * std::log(1.0 / std::tanh(z));
}

// order-2 half-scale tanh density: integral over (2|x|, inf) of
// y (y - 2|x|) / sinh(pi y / 2) dy
double tanh_half_pdf_2(double x) {
    const double b = 2.0 * std::abs(x);
    auto f = [b](double v) {
        const double y = v + b;
        const double s = std::sinh(pi * y / 2.0);
        if (std::isinf(s)) return Complex(0.0, 0.0);
        if (y < 1e-8) return Complex(2.0 * v / pi, 0.0);
        return Complex(y * v / s, 0.0);
    };
    auto r = integrate_halfline_decaying(f, kPdfTol, pi / 2.0 * 0.8);
    return r.value.real();
}

// cosh density for arbitrary order via the gamma-function formula
// 2^{alpha-2} / (Gamma(alpha) pi) * |Gamma((alpha+ix)/2)|^2
double cosh_full_pdf(double alpha, double x) {
    const Complex lg = log_gamma_complex({alpha / 2.0, x / 2.0});
    const double lga = log_gamma_complex({alpha, 0.0}).real();
    return std::exp((alpha - 2.0) * std::numbers::ln2 - lga - std::log(pi) + 2.0 * lg.real());
}

bool is_hyperbolic(Family f) {
    return f == Family::SinhHat || f == Family::CoshHat || f == Family::TanhHat;
}

struct SpecKey {
    int family;
    int scale;
    std::uint64_t order_bits;
    std::uint64_t a_bits;
    auto operator<=>(const SpecKey&) const = default;
};

SpecKey key_of(const DistributionSpec& s) {
    std::uint64_t ob, ab;
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    std::memcpy(&ob, &s.order, 8);
    std::memcpy(&ab, &s.a_param, 8);
    return {static_cast<int>(s.family), static_cast<int>(s.scale), ob, ab};
}

} // namespace

DistributionSpec DistributionSpec::sinh_hat(double order, Scale scale) {
    return {Family::SinhHat, order, scale, 1.0};
}
DistributionSpec DistributionSpec::cosh_hat(double order, Scale scale) {
    return {Family::CoshHat, order, scale, 1.0};
}
DistributionSpec DistributionSpec::tanh_hat(double order, Scale scale) {
    return {Family::TanhHat, order, scale, 1.0};
}
DistributionSpec DistributionSpec::logistic() { return {Family::Logistic, 1.0, Scale::Full, 1.0}; }
DistributionSpec DistributionSpec::uniform_u1() { return {Family::UniformU1, 1.0, Scale::Full, 1.0}; }
DistributionSpec DistributionSpec::triangular_u2() {
    return {Family::TriangularU2, 1.0, Scale::Full, 1.0};
}
DistributionSpec DistributionSpec::triangular_v() {
    return {Family::TriangularV, 2.0, Scale::Full, 1.0};
}
DistributionSpec DistributionSpec::irwin_hall(int n) {
    return {Family::IrwinHall, static_cast<double>(n), Scale::Full, 1.0};
}
DistributionSpec DistributionSpec::density_h(double a) {
    return {Family::DensityH, 1.0, Scale::Full, a};
}
DistributionSpec DistributionSpec::density_g(double a) {
    return {Family::DensityG, 1.0, Scale::Full, a};
}
DistributionSpec DistributionSpec::std_normal() { return {Family::StdNormal, 1.0, Scale::Full, 1.0}; }
DistributionSpec DistributionSpec::gamma_law(double alpha) {
    return {Family::GammaLaw, alpha, Scale::Full, 1.0};
}

void DistributionSpec::validate() const {
    if (!(order > 0.0))
        throw std::domain_error("DistributionSpec: order must be > 0");
    if (family == Family::IrwinHall &&
        (order != std::floor(order) || order < 1.0 || order > 60.0))
        throw std::domain_error("DistributionSpec: Irwin-Hall order must be a positive integer");
    if (family == Family::DensityH && !(a_param >= 1.0))
        throw std::domain_error("DistributionSpec: h_a requires a >= 1");
    if (family == Family::DensityG && !(a_param > 0.5))
        throw std::domain_error("DistributionSpec: g_a requires a > 1/2");
}

bool is_symmetric(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::SinhHat:
        case Family::CoshHat:
        case Family::TanhHat:
        case Family::Logistic:
        case Family::DensityG:
        case Family::StdNormal:
            return true;
        default:
            return false;
    }
}

double pdf_decay_rate(const DistributionSpec& spec) {
    const double half = (spec.scale == Scale::Half && is_hyperbolic(spec.family)) ? 2.0 : 1.0;
    switch (spec.family) {
        case Family::SinhHat: return pi * half;
        case Family::CoshHat: return pi / 2.0 * half;
        case Family::TanhHat: return pi / 2.0 * half;
        case Family::Logistic: return 1.0;
        case Family::DensityG: return spec.a_param;
        case Family::DensityH: return spec.a_param;
        case Family::StdNormal: return 2.0; // super-exponential; truncation sampling tightens it
        case Family::GammaLaw: return 1.0;
        default: return 1.0; // bounded supports
    }
}

// ---- inversion-based densities ---------------------------------------------

namespace {

double full_scale_inversion(Family family, double alpha, double x, double abs_tol) {
    ToleranceSpec tol{abs_tol, 1e-10, 2000000};
    if (family == Family::SinhHat) {
        auto g = [alpha](double u) { return Complex(std::pow(u_over_sinh(u), alpha), 0.0); };
        return fourier_cosine_halfline(g, x, tol, CosineTail::exponential(0.8 * alpha)).value.real();
    }
    if (family == Family::TanhHat) {
        if (alpha <= 1.0 && x == 0.0)
            throw SingularityError("pdf: tanh density diverges at x = 0 for order <= 1");
        auto g = [alpha](double u) { return Complex(std::pow(tanh_over_u(u), alpha), 0.0); };
        return fourier_cosine_halfline(g, x, tol, CosineTail::polynomial(alpha)).value.real();
    }
    if (family == Family::CoshHat) {
        auto g = [alpha](double u) {
            const double c = std::cosh(u);
            return Complex(std::isinf(c) ? 0.0 : std::pow(1.0 / c, alpha), 0.0);
        };
        return fourier_cosine_halfline(g, x, tol, CosineTail::exponential(0.8 * alpha)).value.real();
    }
    throw std::domain_error("pdf_by_inversion: only the hyperbolic families have cf inversions");
}

// cached tabulation for the smooth sinh inversion densities; quintic local
// Lagrange on a uniform grid with even extension across 0
class SinhPdfTable {
public:
    explicit SinhPdfTable(double alpha) {
        hi_ = 16.0 + 2.0 * alpha;
        const int n = static_cast<int>(std::ceil(hi_ / h_)) + 1;
        values_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            values_[static_cast<std::size_t>(i)] =
                full_scale_inversion(Family::SinhHat, alpha, i * h_, 1e-12);
    }

    double operator()(double x) const {
        x = std::abs(x);
        if (x >= hi_ - 4.0 * h_) return 0.0; // density below 1e-17 out here
        const double t = x / h_;
        const long i0 = static_cast<long>(std::floor(t)) - 2;
        double acc = 0.0;
        for (int j = 0; j < 6; ++j) {
            const long idx = i0 + j;
            const double xj = static_cast<double>(idx) * h_;
            double lj = 1.0;
            for (int k = 0; k < 6; ++k) {
                if (k == j) continue;
                const double xk = static_cast<double>(i0 + k) * h_;
                lj *= (x - xk) / (xj - xk);
            }
            acc += lj * values_[static_cast<std::size_t>(std::labs(idx))];
        }
        return acc;
    }

private:
    double hi_;
    double h_ = 0.01;
    std::vector<double> values_;
};

const SinhPdfTable& sinh_table(double alpha) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<SinhPdfTable>> cache;
    std::uint64_t bits;
    std::memcpy(&bits, &alpha, 8);
    std::scoped_lock lock(mu);
    auto it = cache.find(bits);
    if (it == cache.end())
        it = cache.emplace(bits, std::make_unique<SinhPdfTable>(alpha)).first;
    return *it->second;
}

double irwin_hall_pdf(int m, double x) {
    if (x <= 0.0 || x >= m) return 0.0;
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= i; // (m-1)!
    double binom = 1.0, acc = 0.0;
    for (int k = 0; k <= static_cast<int>(std::floor(x)); ++k) {
        acc += ((k % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(x - k, m - 1);
        binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
    }
    return acc / fact;
}

double irwin_hall_cdf(int m, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= m) return 1.0;
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i; // m!
    double binom = 1.0, acc = 0.0;
    for (int k = 0; k <= static_cast<int>(std::floor(x)); ++k) {
        acc += ((k % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(x - k, m);
        binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
    }
    return acc / fact;
}

double h_density(double a, double x) {
    if (!(x > 0.0))
        throw std::domain_error("pdf: h_a is supported on x > 0");
    const double one_minus_em = -std::expm1(-x);
    const double num = (a - 1.0) * x * one_minus_em + x_minus_1_plus_exp(x);
    return std::exp(-a * x) * num / (one_minus_em * one_minus_em);
}

double g_density(double a, double x) {
    const double t = std::exp(-std::abs(x));
    const double d = 1.0 + t;
    return std::exp(-a * std::abs(x)) * (a + (a - 1.0) * t) / (d * d);
}

} // namespace

double pdf(const DistributionSpec& spec, double x) {
    spec.validate();
    const double alpha = spec.order;
    switch (spec.family) {
        case Family::SinhHat:
        case Family::CoshHat:
        case Family::TanhHat: {
            // everything reduces to the half-scale density, pdf_half(x) = 2 pdf_full(2x)
            const bool half = spec.scale == Scale::Half;
            const double xh = half ? x : x / 2.0;
            double v;
            if (spec.family == Family::SinhHat && alpha == 1.0) v = sinh_half_pdf_1(xh);
            else if (spec.family == Family::SinhHat && alpha == 2.0) v = sinh_half_pdf_2(xh);
            else if (spec.family == Family::CoshHat && alpha == 1.0) v = cosh_half_pdf_1(xh);
            else if (spec.family == Family::CoshHat && alpha == 2.0) v = cosh_half_pdf_2(xh);
            else if (spec.family == Family::CoshHat) v = 2.0 * cosh_full_pdf(alpha, 2.0 * xh);
            else if (spec.family == Family::TanhHat && alpha == 1.0) v = tanh_half_pdf_1(xh);
            else if (spec.family == Family::TanhHat && alpha == 2.0) v = tanh_half_pdf_2(xh);
            else if (spec.family == Family::SinhHat) v = 2.0 * sinh_table(alpha)(2.0 * xh);
            else {
                // tanh at general order: no cache (limited smoothness at the origin)
                if (alpha <= 1.0 && xh == 0.0)
                    throw SingularityError("pdf: tanh density diverges at x = 0 for order <= 1");
                v = 2.0 * full_scale_inversion(Family::TanhHat, alpha, 2.0 * xh, 1e-11);
            }
            return half ? v : v / 2.0;
        }
        case Family::Logistic: {
            const double t = std::exp(-std::abs(x));
            return t / ((1.0 + t) * (1.0 + t));
        }
        case Family::UniformU1: return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
        case Family::TriangularU2: return (x > 0.0 && x < 1.0) ? 2.0 * (1.0 - x) : 0.0;
        case Family::TriangularV:
            if (x <= 0.0 || x >= 2.0) return 0.0;
            return x <= 1.0 ? x : 2.0 - x;
        case Family::IrwinHall: return irwin_hall_pdf(static_cast<int>(alpha), x);
        case Family::DensityH: return h_density(spec.a_param, x);
        case Family::DensityG: return g_density(spec.a_param, x);
        case Family::StdNormal:
            return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
        case Family::GammaLaw: {
            if (!(x > 0.0))
                throw std::domain_error("pdf: gamma law is supported on x > 0");
            const double lga = log_gamma_complex({alpha, 0.0}).real();
            return std::exp((alpha - 1.0) * std::log(x) - x - lga);
        }
    }
    throw std::logic_error("pdf: unhandled family");
}

double pdf_by_inversion(const DistributionSpec& spec, double x, double abs_tol) {
    spec.validate();
    if (!is_hyperbolic(spec.family))
        throw std::domain_error("pdf_by_inversion: hyperbolic families only");
    const bool half = spec.scale == Scale::Half;
    const double xf = half ? 2.0 * x : x;
    const double v = full_scale_inversion(spec.family, spec.order, xf, abs_tol);
    return half ? 2.0 * v : v;
}

double pdf_unit_interval_form(const DistributionSpec& spec, double x) {
    spec.validate();
    const double alpha = spec.order;
    const bool half = spec.scale == Scale::Half;
    const double xf = half ? 2.0 * x : x;
    Integrand integrand;
    double prefactor;
    if (spec.family == Family::SinhHat) {
        integrand = [alpha, xf](double y) {
            const double r = log_ratio_unit(y);
            return Complex(std::cos(xf * std::log(y)) * std::pow(y, alpha - 1.0) *
                               std::pow(r, alpha),
                           0.0);
        };
        prefactor = std::pow(2.0, alpha) / pi;
    } else if (spec.family == Family::TanhHat) {
        if (!(alpha > 1.0))
            throw std::domain_error(
                "pdf_unit_interval_form: tanh form requires order > 1 (absolute convergence)");
        if (xf == 0.0)
            throw std::domain_error(
                "pdf_unit_interval_form: tanh form at x = 0 decays too slowly near y = 0 "
                "to truncate in double precision");
        auto f = [alpha, xf](double y) {
            const double r = log_ratio_unit(y);
            const double q = 1.0 / (r * (1.0 + y * y));
            return Complex(std::cos(xf * std::log(y)) * std::pow(q, alpha) / y, 0.0);
        };
        // the integrand oscillates in ln y toward the origin; integrate lobe
        // by lobe between zeros of cos(x ln y) and accelerate the alternation
        const double ax = std::abs(xf);
        const double t1 = std::max(8.0, 2.0 * pi / ax);
        const long k0 = static_cast<long>(std::ceil(t1 * ax / pi - 0.5));
        const double z0 = (static_cast<double>(k0) + 0.5) * pi / ax;
        auto main = integrate_finite(f, std::exp(-z0), 1.0, kPdfTol);

        const int sub = 12; // geometric subpanels per lobe in y
        std::vector<Complex> lobes;
        auto lobe = [&](std::int64_t k) {
            while (static_cast<std::int64_t>(lobes.size()) <= k) {
                const double za = z0 + pi / ax * static_cast<double>(lobes.size());
                if (za > 690.0) // e^{-za} underflows; alternation settled long ago
                    throw NonConvergence("pdf_unit_interval_form: lobe underflow");
                Complex acc{0.0, 0.0};
                long evals_unused = 0;
                for (int j = 0; j < sub; ++j) {
                    const double lo = std::exp(-(za + pi / ax * (j + 1.0) / sub));
                    const double hi = std::exp(-(za + pi / ax * j / sub));
                    acc += integrate_finite(f, lo, hi, {1e-13, 1e-12, 8000}).value;
                }
                (void)evals_unused;
                lobes.push_back(acc);
            }
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            return sign * lobes[static_cast<std::size_t>(k)];
        };
        auto tail = alternating_sum(lobe, 1e-11, 1e-11, 600);
        const double v = (main.value.real() + tail.value.real()) / pi;
        return half ? 2.0 * v : v;
    } else {
        throw std::domain_error("pdf_unit_interval_form: sinh/tanh families only");
    }
    auto r = integrate_finite(integrand, 0.0, 1.0, kPdfTol);
    const double v = prefactor * r.value.real();
    return half ? 2.0 * v : v;
}

double cf(const DistributionSpec& spec, double theta) {
    spec.validate();
    const double te = (spec.scale == Scale::Half && is_hyperbolic(spec.family))
                          ? theta / 2.0
                          : theta;
    switch (spec.family) {
        case Family::SinhHat: return std::pow(u_over_sinh(te), spec.order);
        case Family::CoshHat: {
            const double c = std::cosh(te);
            return std::isinf(c) ? 0.0 : std::pow(1.0 / c, spec.order);
        }
        case Family::TanhHat: return std::pow(tanh_over_u(te), spec.order);
        case Family::Logistic: return u_over_sinh(pi * theta);
        case Family::StdNormal: return std::exp(-0.5 * theta * theta);
        default:
            throw std::domain_error(
                "cf: closed characteristic functions cover the symmetric families only");
    }
}

// ---- power-series moments ---------------------------------------------------

namespace {

// series in the variable w = z^2 with unit constant term
std::vector<double> series_multiply(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

// A(w)^p for A with a_0 = 1 (J.C.P. Miller recurrence)
std::vector<double> series_power(const std::vector<double>& a, double p) {
    std::vector<double> b(a.size(), 0.0);
    b[0] = 1.0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += ((p + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * a[k] * b[n - k];
        b[n] = acc / static_cast<double>(n);
    }
    return b;
}

std::vector<double> sinh_over_z_series(std::size_t n) {
    std::vector<double> a(n, 0.0);
    double fact = 1.0; // (2k+1)!
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
        a[k] = 1.0 / fact;
    }
    return a;
}

std::vector<double> cosh_z_series(std::size_t n) {
    std::vector<double> a(n, 0.0);
    double fact = 1.0; // (2k)!
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) fact *= (2.0 * k - 1.0) * (2.0 * k);
        a[k] = 1.0 / fact;
    }
    return a;
}

} // namespace

std::vector<double> even_moments(const DistributionSpec& spec, int max_m) {
    spec.validate();
    const std::size_t n = static_cast<std::size_t>(max_m) + 1;

    if (spec.family == Family::StdNormal) {
        std::vector<double> m(n, 1.0);
        double dfact = 1.0;
        for (std::size_t k = 1; k < n; ++k) {
            dfact *= (2.0 * k - 1.0);
            m[k] = dfact; // E X^{2k} = (2k-1)!!
        }
        return m;
    }

    std::vector<double> coeff; // cf(theta) = sum coeff[m] * (theta_scale*theta)^{2m}
    double theta_scale = 1.0;
    switch (spec.family) {
        case Family::SinhHat:
            coeff = series_power(sinh_over_z_series(n), -spec.order);
            break;
        case Family::CoshHat:
            coeff = series_power(cosh_z_series(n), -spec.order);
            break;
        case Family::TanhHat:
            coeff = series_power(
                series_multiply(sinh_over_z_series(n), series_power(cosh_z_series(n), -1.0)),
                spec.order);
            break;
        case Family::Logistic:
            coeff = series_power(sinh_over_z_series(n), -1.0);
            theta_scale = pi;
            break;
        default:
            throw std::domain_error("even_moments: closed cf families only");
    }
    if (spec.scale == Scale::Half && is_hyperbolic(spec.family))
        theta_scale = 0.5;

    std::vector<double> moments(n, 0.0);
    double f2m = 1.0; // (2m)!
    double sign = 1.0;
    double scale_pow = 1.0;
    moments[0] = 1.0;
    for (std::size_t m = 1; m < n; ++m) {
        f2m *= (2.0 * m - 1.0) * (2.0 * m);
        sign = -sign;
        scale_pow *= theta_scale * theta_scale;
        moments[m] = sign * f2m * coeff[m] * scale_pow;
    }
    return moments;
}

// ---- cdf --------------------------------------------------------------------

double cdf(const DistributionSpec& spec, double x) {
    spec.validate();
    const double alpha = spec.order;
    switch (spec.family) {
        case Family::Logistic: return 1.0 / (1.0 + std::exp(-x));
        case Family::UniformU1: return std::clamp(x, 0.0, 1.0);
        case Family::TriangularU2: {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return x * (2.0 - x);
        }
        case Family::TriangularV: {
            if (x <= 0.0) return 0.0;
            if (x >= 2.0) return 1.0;
            return x <= 1.0 ? 0.5 * x * x : 1.0 - 0.5 * (2.0 - x) * (2.0 - x);
        }
        case Family::IrwinHall: return irwin_hall_cdf(static_cast<int>(alpha), x);
        case Family::StdNormal: return 0.5 * std::erfc(-x / std::sqrt(2.0));
        case Family::SinhHat:
            if (alpha == 1.0) {
                const double k = (spec.scale == Scale::Half) ? 2.0 * pi : pi;
                return 1.0 / (1.0 + std::exp(-k * x));
            }
            break;
        case Family::CoshHat:
            if (alpha == 1.0) {
                const double k = (spec.scale == Scale::Half) ? pi / 2.0 : pi / 4.0;
                return 0.5 + (2.0 / pi) * std::atan(std::tanh(k * x));
            }
            break;
        default: break;
    }

    auto f = [&spec](double t) { return Complex(pdf(spec, t), 0.0); };
    if (is_symmetric(spec)) {
        if (x == 0.0) return 0.5;
        if (x < 0.0) return 1.0 - cdf(spec, -x);
        if (x * pdf_decay_rate(spec) > 45.0) return 1.0;
        auto r = integrate_finite(f, 0.0, x, kPdfTol);
        return std::min(1.0, 0.5 + r.value.real());
    }
    if (x <= 0.0) return 0.0;
    if (x * pdf_decay_rate(spec) > 60.0 + 10.0 * spec.order) return 1.0;
    auto r = integrate_finite(f, 0.0, x, kPdfTol);
    return std::clamp(r.value.real(), 0.0, 1.0);
}

// ---- sampling ---------------------------------------------------------------

namespace {

// tabulated CDF on a uniform grid with monotone cubic (Fritsch-Carlson) cells
struct SamplerTable {
    bool fold_symmetric = false; // table models |X|, sign drawn separately
    double lo = 0.0, hi = 1.0, h = 0.0;
    std::vector<double> cum;  // normalized cumulative at nodes
    std::vector<double> dens; // normalized density at nodes (clamped slopes)

    double invert(double u) const {
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        std::size_t i = (it == cum.begin()) ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
        i = std::min(i, cum.size() - 2);
        const double c0 = cum[i], c1 = cum[i + 1];
        const double d0 = dens[i] * h, d1 = dens[i + 1] * h;
        auto hermite = [&](double t) {
            const double t2 = t * t, t3 = t2 * t;
            return (2 * t3 - 3 * t2 + 1) * c0 + (t3 - 2 * t2 + t) * d0 +
                   (-2 * t3 + 3 * t2) * c1 + (t3 - t2) * d1;
        };
        double a = 0.0, b = 1.0;
        for (int k = 0; k < 50; ++k) {
            const double m = 0.5 * (a + b);
            (hermite(m) < u ? a : b) = m;
        }
        return lo + (static_cast<double>(i) + 0.5 * (a + b)) * h;
    }
};

std::pair<double, double> support_bounds(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::UniformU1:
        case Family::TriangularU2: return {0.0, 1.0};
        case Family::TriangularV: return {0.0, 2.0};
        case Family::IrwinHall: return {0.0, spec.order};
        default: break;
    }
    const double rate = pdf_decay_rate(spec);
    double hi = 4.0 / rate;
    while (hi < 400.0) {
        double p;
        try {
            p = pdf(spec, hi);
        } catch (const std::domain_error&) {
            p = 0.0;
        }
        if (p / rate < 1e-11 && p < 1.0) break;
        hi *= 1.5;
    }
    return {0.0, hi};
}

SamplerTable build_sampler_table(const DistributionSpec& spec) {
    SamplerTable t;
    t.fold_symmetric = is_symmetric(spec);
    auto [lo, hi] = support_bounds(spec);
    t.lo = lo;
    t.hi = hi;
    const int cells = 4096;
    t.h = (hi - lo) / cells;
    t.cum.assign(cells + 1, 0.0);
    t.dens.assign(cells + 1, 0.0);

    const double fold = t.fold_symmetric ? 2.0 : 1.0;
    auto f = [&](double x) { return Complex(fold * pdf(spec, x), 0.0); };
    double acc = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double a = lo + i * t.h;
        auto r = integrate_finite(f, a, a + t.h, {1e-13, 1e-9, 40000});
        acc += r.value.real();
        t.cum[static_cast<std::size_t>(i) + 1] = acc;
    }
    for (int i = 0; i <= cells; ++i) {
        const double x = lo + i * t.h;
        double d;
        try {
            d = fold * pdf(spec, i == 0 ? lo + 1e-12 * t.h : x);
        } catch (const std::exception&) {
            d = 0.0;
        }
        if (!std::isfinite(d)) d = 0.0;
        t.dens[static_cast<std::size_t>(i)] = d;
    }
    for (auto& c : t.cum) c /= acc;
    for (auto& d : t.dens) d /= acc;
    // Fritsch-Carlson clamp keeps each Hermite cell monotone
    for (int i = 0; i < cells; ++i) {
        const double delta = (t.cum[i + 1] - t.cum[i]) / t.h;
        t.dens[i] = std::min(t.dens[i], 3.0 * std::max(delta, 0.0));
        t.dens[i + 1] = std::min(t.dens[i + 1], 3.0 * std::max(delta, 0.0));
    }
    return t;
}

const SamplerTable& sampler_table(const DistributionSpec& spec) {
    static std::mutex mu;
    static std::map<SpecKey, std::unique_ptr<SamplerTable>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(key_of(spec));
    if (it == cache.end())
        it = cache.emplace(key_of(spec), std::make_unique<SamplerTable>(build_sampler_table(spec)))
                 .first;
    return *it->second;
}

} // namespace

SampleBatch sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    spec.validate();
    if (n < 1)
        throw std::domain_error("sample: n must be >= 1");
    SampleBatch batch;
    batch.seed = seed;
    batch.spec = spec;
    batch.values.reserve(n);

    std::mt19937_64 rng(seed);
    auto next_u = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0,1), 53 bits
    };

    // closed inverses where they exist; tabulated inversion otherwise
    if (spec.family == Family::UniformU1) {
        for (std::size_t i = 0; i < n; ++i) batch.values.push_back(next_u());
        return batch;
    }
    if (spec.family == Family::Logistic) {
        for (std::size_t i = 0; i < n; ++i) {
            const double u = std::clamp(next_u(), 1e-15, 1.0 - 1e-15);
            batch.values.push_back(std::log(u / (1.0 - u)));
        }
        return batch;
    }

    const SamplerTable& table = sampler_table(spec);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = next_u();
        if (table.fold_symmetric) {
            const double m = std::clamp(std::abs(2.0 * u - 1.0), 0.0, 1.0 - 1e-15);
            const double mag = table.invert(m);
            batch.values.push_back(u >= 0.5 ? mag : -mag);
        } else {
            batch.values.push_back(table.invert(std::clamp(u, 1e-15, 1.0 - 1e-15)));
        }
    }
    return batch;
}

// ---- complex moments --------------------------------------------------------

namespace {

bool has_closed_cf(const DistributionSpec& spec) {
    return is_hyperbolic(spec.family) || spec.family == Family::Logistic ||
           spec.family == Family::StdNormal;
}

// E(a+iX)^{-s} through the Laplace kernel of the characteristic function:
// (1/Gamma(s)) integral t^{s-1} e^{-at} cf(t) dt. Positive kernel, no
// cancellation; used when the shift a is tiny and Re(s) large enough to make
// the direct fold ill-conditioned in double precision.
Complex moment_by_cf_kernel(const DistributionSpec& spec, Complex s, double a,
                            const ToleranceSpec& tol) {
    auto w = [&spec, a](double t) { return Complex(std::exp(-a * t) * cf(spec, t), 0.0); };
    double rate = a;
    if (spec.family == Family::Logistic)
        rate += pi;
    else if (spec.family != Family::TanhHat)
        rate += (spec.scale == Scale::Half ? 0.5 : 1.0) * spec.order;
    auto r = mellin_halfline(w, s, tol, rate);
    if (!r.converged)
        throw NonConvergence("complex_moment: cf-kernel quadrature did not converge");
    return r.value / gamma_complex(s);
}

} // namespace

Complex complex_moment(const DistributionSpec& spec, Complex s, double a) {
    spec.validate();
    if (!(a > 0.0))
        throw std::domain_error("complex_moment: requires a > 0");

    if (is_symmetric(spec)) {
        // the direct fold loses ~(Re s - 1) * log10(1/a) digits as a -> 0;
        // switch to the cancellation-free cf kernel in that corner
        if (s.real() >= 2.5 && a < 0.1 && has_closed_cf(spec))
            return moment_by_cf_kernel(spec, s, a, kMomentTol);
        auto f = [&spec, s, a](double x) {
            const double density = pdf(spec, x);
            if (density == 0.0) return Complex(0.0, 0.0);
            return (complex_pow_principal({a, x}, s) + complex_pow_principal({a, -x}, s)) *
                   density;
        };
        auto r = integrate_halfline_decaying(f, kMomentTol, 0.7 * pdf_decay_rate(spec));
        if (!r.converged)
            throw NonConvergence("complex_moment: quadrature did not converge");
        return r.value;
    }

    auto f = [&spec, s, a](double x) {
        const double density = pdf(spec, x);
        if (density == 0.0) return Complex(0.0, 0.0);
        return complex_pow_principal({a, x}, s) * density;
    };
    switch (spec.family) {
        case Family::UniformU1:
        case Family::TriangularU2:
            return integrate_finite(f, 0.0, 1.0, kMomentTol).value;
        case Family::TriangularV:
            return integrate_finite(f, 0.0, 2.0, kMomentTol).value;
        case Family::IrwinHall:
            return integrate_finite(f, 0.0, spec.order, kMomentTol).value;
        default: {
            auto r = integrate_halfline_decaying(f, kMomentTol, 0.7 * pdf_decay_rate(spec));
            if (!r.converged)
                throw NonConvergence("complex_moment: quadrature did not converge");
            return r.value;
        }
    }
}

Complex complex_moment_cosine(const DistributionSpec& spec, double s, double a) {
    spec.validate();
    if (!(a > 0.0))
        throw std::domain_error("complex_moment_cosine: requires a > 0");
    if (!is_symmetric(spec))
        throw std::domain_error("complex_moment_cosine: symmetric laws only");
    auto f = [&spec, s, a](double x) {
        const double density = pdf(spec, x);
        if (density == 0.0) return Complex(0.0, 0.0);
        const double r2 = a * a + x * x;
        return Complex(2.0 * std::cos(s * std::atan(x / a)) * std::pow(r2, -s / 2.0) * density,
                       0.0);
    };
    auto r = integrate_halfline_decaying(f, kMomentTol, 0.7 * pdf_decay_rate(spec));
    if (!r.converged)
        throw NonConvergence("complex_moment_cosine: quadrature did not converge");
    return r.value;
}

double abs_moment(const DistributionSpec& spec, double s) {
    spec.validate();
    if (!(s > -1.0))
        throw SingularityError("abs_moment: E|X|^s diverges for s <= -1");
    if (s == 0.0) return 1.0;

    auto w = [&spec](double x) {
        double d;
        try {
            d = pdf(spec, x);
        } catch (const std::domain_error&) {
            d = 0.0;
        }
        return Complex(d, 0.0);
    };
    const double fold = is_symmetric(spec) ? 2.0 : 1.0;
    auto r = mellin_halfline(w, Complex(s + 1.0, 0.0), kMomentTol, 0.7 * pdf_decay_rate(spec));
    if (!r.converged)
        throw NonConvergence("abs_moment: quadrature did not converge");
    return fold * r.value.real();
}

Complex aux_expectation_neg_power(const DistributionSpec& aux, double c, Complex s) {
    aux.validate();
    if (!(c > 0.0))
        throw std::domain_error("aux_expectation_neg_power: requires c > 0");

    if (aux.family == Family::TriangularU2) {
        // E (c+U2)^{-s} with density 2(1-u) on (0,1)
        if (std::abs(s - Complex(1.0, 0.0)) < 1e-6)
            return Complex(2.0 * (1.0 + c) * std::log((c + 1.0) / c) - 2.0, 0.0);
        if (std::abs(s - Complex(2.0, 0.0)) < 1e-6)
            return Complex(2.0 / c - 2.0 * std::log((c + 1.0) / c), 0.0);
        const Complex one_s = 1.0 - s, two_s = 2.0 - s;
        return 2.0 * (1.0 + c) / one_s * (cpow_real(c + 1.0, one_s) - cpow_real(c, one_s)) -
               2.0 / two_s * (cpow_real(c + 1.0, two_s) - cpow_real(c, two_s));
    }

    int m;
    if (aux.family == Family::UniformU1) m = 1;
    else if (aux.family == Family::TriangularV) m = 2;
    else if (aux.family == Family::IrwinHall) m = static_cast<int>(aux.order);
    else
        throw std::domain_error("aux_expectation_neg_power: uniform-sum laws only");

    // E (c+V_m)^{-s} = [sum_k (-1)^k C(m,k) (c+k)^{m-s}] / prod_{j=1..m} (s-j)
    int near_j = 0;
    for (int j = 1; j <= m; ++j)
        if (std::abs(s - Complex(static_cast<double>(j), 0.0)) < 1e-5) near_j = j;

    if (near_j == 0) {
        Complex num{0.0, 0.0};
        double binom = 1.0;
        for (int k = 0; k <= m; ++k) {
            num += ((k % 2 == 0) ? 1.0 : -1.0) * binom *
                   cpow_real(c + k, static_cast<double>(m) - s);
            binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
        }
        Complex den{1.0, 0.0};
        for (int j = 1; j <= m; ++j) den *= s - static_cast<double>(j);
        return num / den;
    }

    // removable integer: ratio of first-order expansions about s = near_j
    const Complex h = s - static_cast<double>(near_j);
    Complex n1{0.0, 0.0}, n2{0.0, 0.0};
    double binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double lg = std::log(c + k);
        const double pw = std::pow(c + k, static_cast<double>(m - near_j));
        n1 += -sign * binom * lg * pw;
        n2 += sign * binom * lg * lg * pw;
        binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
    }
    double d1 = 1.0;
    for (int j = 1; j <= m; ++j)
        if (j != near_j) d1 *= static_cast<double>(near_j - j);
    double d2 = 0.0;
    for (int i = 1; i <= m; ++i) {
        if (i == near_j) continue;
        double prod = 1.0;
        for (int j = 1; j <= m; ++j)
            if (j != near_j && j != i) prod *= static_cast<double>(near_j - j);
        d2 += prod;
    }
    d2 *= 2.0;
    return (n1 + 0.5 * h * n2) / (d1 + 0.5 * h * d2);
}

} // namespace hyperzeta
