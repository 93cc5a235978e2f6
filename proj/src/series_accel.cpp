#include "hyperzeta/series_accel.hpp"

#include "hyperzeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hyperzeta {

namespace {

constexpr int kWindow = 96;

// best settled diagonal of the iterated-averaging table over the given
// signed terms, with the change at the settling depth as error estimate
std::pair<std::complex<double>, double> averaged(const std::vector<std::complex<double>>& terms) {
    const std::size_t w = terms.size();
    std::vector<std::complex<double>> row(w);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < w; ++n) {
        acc += terms[n];
        row[n] = acc;
    }
    std::complex<double> best = row.back();
    double best_err = std::abs(row[w - 1] - row[w - 2]);
    std::complex<double> prev = row[0];
    for (std::size_t j = 1; j < w; ++j) {
        for (std::size_t i = 0; i + j < w; ++i)
            row[i] = 0.5 * (row[i] + row[i + 1]);
        const double change = std::abs(row[0] - prev);
        if (change < best_err) {
            best_err = change;
            best = row[0];
        }
        prev = row[0];
    }
    return {best, best_err};
}

} // namespace

SeriesResult alternating_sum(const std::function<std::complex<double>(std::int64_t)>& a,
                             double abs_tol, double rel_tol, std::int64_t max_terms) {
    std::complex<double> head{0.0, 0.0};
    std::int64_t offset = 0;
    std::int64_t used = 0;

    while (used < max_terms) {
        std::vector<std::complex<double>> signed_terms;
        signed_terms.reserve(kWindow);
        // grow the window, retesting convergence as terms arrive; term
        // generators may stop being evaluable far into the tail
        for (int w : {16, 32, 56, kWindow}) {
            const std::int64_t budget_w =
                std::min<std::int64_t>(w, max_terms - used + static_cast<std::int64_t>(signed_terms.size()));
            while (static_cast<std::int64_t>(signed_terms.size()) < budget_w) {
                const std::int64_t n = offset + static_cast<std::int64_t>(signed_terms.size());
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                signed_terms.push_back(sign * a(n));
            }
            if (signed_terms.size() < 8)
                break;
            auto [best, best_err] = averaged(signed_terms);
            const std::complex<double> value = head + best;
            const double err = 4.0 * best_err + 8.0 * std::abs(value) * 1e-16;
            if (err <= std::max(abs_tol, rel_tol * std::abs(value))) {
                used += static_cast<std::int64_t>(signed_terms.size());
                return {value, err, used, true};
            }
            if (budget_w < w)
                break;
        }
        used += static_cast<std::int64_t>(signed_terms.size());
        if (signed_terms.size() < 8)
            break;
        // window failed to settle: absorb it into the explicit head and retry
        for (const auto& t : signed_terms) head += t;
        offset += static_cast<std::int64_t>(signed_terms.size());
    }
    throw NonConvergence("alternating_sum: term budget exhausted");
}

} // namespace hyperzeta
