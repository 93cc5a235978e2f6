#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace hyperzeta {

using Complex = std::complex<double>;

struct SeriesResult {
    std::complex<double> value{};
    double abs_error_estimate = 0.0;
    std::int64_t terms_used = 0;
    bool converged = false;
};

// Sum of sum_{n>=0} (-1)^n a(n) by iterated averaging of partial sums
// (Euler / van Wijngaarden). Handles slowly decaying and mildly growing
// alternating tails; moves the acceleration window forward if the first
// window does not settle. Throws NonConvergence when the budget runs out.
SeriesResult alternating_sum(const std::function<std::complex<double>(std::int64_t)>& a,
                             double abs_tol, double rel_tol,
                             std::int64_t max_terms = 10000);

} // namespace hyperzeta
