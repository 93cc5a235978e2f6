#include "hyperzeta/bernoulli.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hyperzeta {

namespace {

constexpr int kMaxIndex = 60;
constexpr int kTangentCount = kMaxIndex / 2; // B_{2n} needs tangent number T_n

// Tangent numbers T_1..T_m via the Seidel triangle. All additions are of
// positive terms, so the floating-point relative error stays at a few ulps.
std::array<double, kTangentCount + 1> tangent_numbers() {
    std::array<double, kTangentCount + 1> t{};
    t[1] = 1.0;
    for (int n = 2; n <= kTangentCount; ++n)
        t[n] = (n - 1) * t[n - 1];
    for (int n = 2; n <= kTangentCount; ++n)
        for (int j = n; j <= kTangentCount; ++j)
            t[j] = (j - n) * t[j - 1] + (j - n + 2) * t[j];
    return t;
}

} // namespace

double bernoulli_number(int n) {
    if (n < 0)
        throw std::domain_error("bernoulli_number: n must be >= 0");
    if (n > kMaxIndex)
        throw std::overflow_error("bernoulli_number: n > 60 not supported");
    if (n == 0) return 1.0;
    if (n == 1) return -0.5;
    if (n % 2 == 1) return 0.0;

    static const std::array<double, kTangentCount + 1> tangent = tangent_numbers();
    const int m = n / 2;
    // B_{2m} = (-1)^{m-1} * 2m * T_m / (4^m (4^m - 1))
    const double four_m = std::ldexp(1.0, 2 * m); // 4^m, exact
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * static_cast<double>(n) * tangent[m] / (four_m * (four_m - 1.0));
}

double bernoulli_polynomial(int m, double x) {
    if (m < 0 || m > kMaxIndex + 1)
        throw std::domain_error("bernoulli_polynomial: order out of range");
    double binom = 1.0; // C(m, j)
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) {
        if (j % 2 == 0 || j == 1)
            acc += binom * bernoulli_number(j) * std::pow(x, static_cast<double>(m - j));
        binom *= static_cast<double>(m - j) / static_cast<double>(j + 1);
    }
    return acc;
}

} // namespace hyperzeta
