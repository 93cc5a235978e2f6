#include "hyperzeta/quadrature.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/series_accel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hyperzeta {

namespace {

using Complex = std::complex<double>;

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 nodes).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
    double lo = 0.0, hi = 0.0;
    Complex value{};
    double err = 0.0;
    double resabs = 0.0;
    bool at_floor = false; // error estimate dominated by round-off
};

Panel gk15(const Integrand& f, double lo, double hi, long& evals) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    Complex fv[15];
    const Complex fc = f(c);
    fv[14] = fc;
    Complex resg = kWg[3] * fc;
    Complex resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        const Complex fsum = f1 + f2;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) // Gauss nodes are the odd-index Kronrod nodes
            resg += kWg[j / 2] * fsum;
    }
    evals += 15;
    for (const Complex& v : fv)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonConvergence("quadrature: integrand evaluated to a non-finite value");

    const Complex reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * h;
    p.resabs = resabs * h;
    resasc *= h;
    double err = std::abs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * kEps * p.resabs;
    if (err <= floor) {
        err = floor;
        p.at_floor = true;
    }
    p.err = err;
    return p;
}

// Adaptive refinement of an initial panel list: repeatedly bisect the panel
// with the largest error until the summed estimate meets the tolerance, the
// budget runs out, or every remaining panel is round-off limited.
QuadratureResult adapt(const Integrand& f, std::vector<std::pair<double, double>> seeds,
                       const ToleranceSpec& tol, long& evals) {
    if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.abs_tol >= 1.0 || tol.rel_tol >= 1.0)
        throw std::invalid_argument("quadrature: tolerances must lie in (0, 1)");

    std::vector<Panel> panels;
    panels.reserve(seeds.size() + 64);
    Complex value{};
    double errsum = 0.0;
    for (auto [a, b] : seeds) {
        panels.push_back(gk15(f, a, b, evals));
        value += panels.back().value;
        errsum += panels.back().err;
    }

    auto splittable = [](const Panel& p) {
        const double mid = 0.5 * (p.lo + p.hi);
        return mid > p.lo && mid < p.hi && !p.at_floor;
    };
    auto worse = [&splittable](const Panel& p, const Panel& q) {
        // stuck panels sink to the bottom of the heap
        const bool ps = splittable(p), qs = splittable(q);
        if (ps != qs) return !ps;
        if (p.err != q.err) return p.err < q.err;
        return p.lo < q.lo; // deterministic tie-break
    };
    std::make_heap(panels.begin(), panels.end(), worse);

    while (true) {
        errsum = std::max(errsum, 0.0); // guard incremental drift
        const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(value));
        if (errsum <= target)
            return {value, errsum, evals, true};
        if (evals + 30 > tol.max_evaluations)
            return {value, errsum, evals, false};
        if (!splittable(panels.front()))
            return {value, errsum, evals, false}; // round-off limited everywhere

        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel worst = panels.back();
        panels.pop_back();
        value -= worst.value;
        errsum -= worst.err;

        const double mid = 0.5 * (worst.lo + worst.hi);
        for (const auto& side : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
            panels.push_back(gk15(f, side.first, side.second, evals));
            value += panels.back().value;
            errsum += panels.back().err;
            std::push_heap(panels.begin(), panels.end(), worse);
        }
    }
}

std::vector<std::pair<double, double>> geometric_seeds(double lo, double hi, double first_width) {
    std::vector<std::pair<double, double>> seeds;
    double a = lo;
    double w = first_width;
    while (a + w < hi && seeds.size() < 60) {
        seeds.emplace_back(a, a + w);
        a += w;
        w *= 2.0;
    }
    seeds.emplace_back(a, hi);
    return seeds;
}

// Estimate a truncation point T for |f| <= C e^{-rate x} from samples of |f|,
// so that the implied tail mass C e^{-rate T} / rate < tail_budget.
double choose_truncation(const Integrand& f, double x0, double rate, double tail_budget,
                         long& evals) {
    const double step = 4.0 / rate;
    double t_needed = x0 + 16.0 / rate;
    double prev_mag = -1.0;
    double max_mag = 0.0;
    int rises_after_peak = 0;
    for (int k = 1; k <= 10; ++k) {
        const double x = x0 + k * step;
        const double mag = std::abs(f(x));
        ++evals;
        if (mag > max_mag) max_mag = mag;
        if (prev_mag >= 0.0 && mag > 1.5 * prev_mag && mag > 1e-280 && k >= 6)
            ++rises_after_peak;
        prev_mag = mag;
        if (mag > 0.0) {
            const double t_k = x + (std::log(mag / (tail_budget * rate)) + 2.0) / rate;
            t_needed = std::max(t_needed, t_k);
        }
    }
    if (rises_after_peak >= 3)
        throw NonConvergence("integrate_halfline_decaying: sampled magnitudes violate the decay hint");
    return t_needed;
}

QuadratureResult halfline_from(const Integrand& f, double x0, const ToleranceSpec& tol,
                               double rate) {
    long evals = 0;
    const double tail_budget = 0.5 * tol.abs_tol;
    const double T = choose_truncation(f, x0, rate, tail_budget, evals);

    ToleranceSpec inner = tol;
    inner.abs_tol = 0.5 * tol.abs_tol;
    QuadratureResult r = adapt(f, geometric_seeds(x0, T, std::min(1.0 / rate, T - x0)), inner, evals);
    const double tail_bound = std::abs(f(T)) / rate;
    ++evals;
    r.evaluations = evals;
    r.abs_error_estimate += tail_bound;
    r.converged = r.converged && r.abs_error_estimate <=
                                     std::max(tol.abs_tol, tol.rel_tol * std::abs(r.value));
    return r;
}

} // namespace

QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const ToleranceSpec& tol) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::domain_error("integrate_finite: requires finite lo < hi");
    long evals = 0;
    QuadratureResult r = adapt(f, {{lo, hi}}, tol, evals);
    r.evaluations = evals;
    return r;
}

QuadratureResult integrate_halfline_decaying(const Integrand& f, const ToleranceSpec& tol,
                                             double decay_hint) {
    if (!(decay_hint > 0.0))
        throw std::domain_error("integrate_halfline_decaying: decay_hint must be > 0");
    return halfline_from(f, 0.0, tol, decay_hint);
}

QuadratureResult integrate_real_line_symmetric(const Integrand& f, const ToleranceSpec& tol,
                                               double decay_hint) {
    auto folded = [&f](double x) { return f(x) + f(-x); };
    return integrate_halfline_decaying(folded, tol, decay_hint);
}

QuadratureResult mellin_halfline(const Integrand& w, std::complex<double> s,
                                 const ToleranceSpec& tol, double decay_hint) {
    const double sigma = s.real();
    if (!(sigma > 0.0))
        throw std::domain_error("mellin_halfline: requires Re(s) > 0");
    if (!(decay_hint > 0.0))
        throw std::domain_error("mellin_halfline: decay_hint must be > 0");

    auto weighted = [&w, s](double x) {
        return std::exp((s - 1.0) * std::log(x)) * w(x);
    };
    if (sigma >= 1.0)
        return halfline_from(weighted, 0.0, tol, 0.7 * decay_hint);

    // Near zero substitute u = x^sigma: x^{s-1} dx = (1/sigma) u^{i tau/sigma} du,
    // which removes the modulus singularity entirely.
    const double tau = s.imag();
    auto near_zero = [&w, sigma, tau](double u) {
        const double x = std::pow(u, 1.0 / sigma);
        const Complex phase = (tau == 0.0) ? Complex(1.0, 0.0)
                                           : std::exp(Complex(0.0, tau / sigma * std::log(u)));
        return phase * w(x) / sigma;
    };
    ToleranceSpec half = tol;
    half.abs_tol = 0.5 * tol.abs_tol;
    long evals = 0;
    QuadratureResult head = adapt(near_zero, {{0.0, 1.0}}, half, evals);
    QuadratureResult rest = halfline_from(weighted, 1.0, half, 0.7 * decay_hint);
    QuadratureResult r;
    r.value = head.value + rest.value;
    r.abs_error_estimate = head.abs_error_estimate + rest.abs_error_estimate;
    r.evaluations = evals + rest.evaluations;
    r.converged = head.converged && rest.converged;
    return r;
}

QuadratureResult fourier_cosine_halfline(const Integrand& g, double x,
                                         const ToleranceSpec& tol, CosineTail tail) {
    using std::numbers::pi;
    x = std::abs(x); // the transform is even in x

    auto h = [&g, x](double u) { return std::cos(x * u) * g(u); };
    ToleranceSpec scaled = tol;
    scaled.abs_tol = std::min(0.5, tol.abs_tol * pi);

    if (tail.kind == CosineTail::Kind::Exponential) {
        QuadratureResult r = integrate_halfline_decaying(h, scaled, tail.rate_or_power);
        r.value /= pi;
        r.abs_error_estimate /= pi;
        return r;
    }

    const double p = tail.rate_or_power;
    long evals = 0;

    if (x == 0.0) {
        if (p <= 1.0)
            throw SingularityError("fourier_cosine_halfline: divergent at x = 0 for tail power <= 1");
        const double T0 = 40.0;
        ToleranceSpec half = scaled;
        half.abs_tol *= 0.5;
        QuadratureResult main = adapt(g, geometric_seeds(0.0, T0, 0.5), half, evals);
        // asymptotic tail C u^{-p}; estimate C at two points, their spread is the error
        const double c1 = std::abs(g(2.0 * T0)) * std::pow(2.0 * T0, p);
        const double c2 = std::abs(g(4.0 * T0)) * std::pow(4.0 * T0, p);
        evals += 2;
        const double g_t0 = g(T0).real();
        ++evals;
        const double sign = (g_t0 >= 0.0) ? 1.0 : -1.0;
        const double tail_mass = sign * c2 * std::pow(T0, 1.0 - p) / (p - 1.0);
        const double tail_err = (std::abs(c1 - c2) + 1e-15 * c2) * std::pow(T0, 1.0 - p) / (p - 1.0);
        QuadratureResult r;
        r.value = (main.value + tail_mass) / pi;
        r.abs_error_estimate = (main.abs_error_estimate + tail_err) / pi;
        r.evaluations = evals;
        r.converged = main.converged;
        return r;
    }

    // integrate up to a zero of cos(x u), then sum half-period lobes with
    // alternating-series acceleration
    const double half_period = pi / x;
    const double t_start = std::max(8.0, 2.0 * half_period);
    const long m0 = static_cast<long>(std::ceil(t_start * x / pi - 0.5));
    const double z0 = (static_cast<double>(m0) + 0.5) * half_period;

    std::vector<std::pair<double, double>> seeds;
    if (z0 <= 12.0 || half_period >= 2.0) {
        seeds = geometric_seeds(0.0, z0, std::min(0.5, z0 * 0.25));
    } else {
        seeds = geometric_seeds(0.0, std::min(1.0, z0 * 0.5), 0.25);
        double a = seeds.back().second;
        long lobes = static_cast<long>(std::ceil((z0 - a) / half_period));
        long group = std::max<long>(1, lobes / 512);
        double step = half_period * static_cast<double>(group);
        while (a + step < z0) {
            seeds.emplace_back(a, a + step);
            a += step;
        }
        seeds.emplace_back(a, z0);
    }
    ToleranceSpec half = scaled;
    half.abs_tol *= 0.5;
    QuadratureResult main = adapt(h, seeds, half, evals);

    // lazily computed lobe integrals I_k over [z0 + k*hp, z0 + (k+1)*hp]
    std::vector<Complex> lobes;
    double lobe_err = 0.0;
    auto lobe = [&](std::int64_t k) {
        while (static_cast<std::int64_t>(lobes.size()) <= k) {
            const double a = z0 + half_period * static_cast<double>(lobes.size());
            const double m = a + 0.5 * half_period;
            Panel p1 = gk15(h, a, m, evals);
            Panel p2 = gk15(h, m, a + half_period, evals);
            lobes.push_back(p1.value + p2.value);
            lobe_err += p1.err + p2.err;
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * lobes[static_cast<std::size_t>(k)]; // feed +|lobe| pattern
    };
    SeriesResult tail_sum = alternating_sum(lobe, half.abs_tol, half.rel_tol, 4000);

    QuadratureResult r;
    r.value = (main.value + tail_sum.value) / pi;
    r.abs_error_estimate = (main.abs_error_estimate + tail_sum.abs_error_estimate + lobe_err) / pi;
    r.evaluations = evals;
    r.converged = main.converged && tail_sum.converged;
    return r;
}

} // namespace hyperzeta
