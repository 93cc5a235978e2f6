#pragma once

namespace hyperzeta {

// Bernoulli number B_n in the convention of the defining convolution
// sum_{k=0}^{n} C(n+1,k) B_k = 0 (so B_1 = -1/2, odd B_n = 0 for n >= 3).
// Computed from the tangent-number triangle: an exact, cancellation-free
// recurrence, independent of any zeta evaluation.
// Throws std::domain_error for n < 0 and std::overflow_error for n > 60.
double bernoulli_number(int n);

// Bernoulli polynomial B_m(x) = sum_j C(m,j) B_j x^{m-j}, m <= 61.
double bernoulli_polynomial(int m, double x);

} // namespace hyperzeta
