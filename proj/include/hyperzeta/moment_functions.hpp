#pragma once

#include "hyperzeta/distributions.hpp"

#include <complex>
#include <utility>

namespace hyperzeta {

// The nine hyperbolic moment functions:
//   S1(s,a) = sum (n+a)^{-s}                      S2(s,a) = sum n (n+a)^{-s}
//   C1(s,a) = sum (-1)^n (n+a)^{-s}               C2(s,a) = sum (-1)^n (n+1)(n+a)^{-s}
//   T1(s,a) = sum 2 (-1)^n E(a+n+U)^{-s}          T2(s,a) = sum 4 (-1)^{n-1} n E(a-1+n+V)^{-s}
//   SStar   = sum C(n+alpha-1,n)(n+a)^{-s}        CStar   = sum C(-alpha,n)(n+a)^{-s}
//   TStar   = 2^alpha sum (-1)^n C(n+alpha-1,n) E(a+n+V_alpha)^{-s}   (alpha integer)
enum class MomentKind { S1, S2, C1, C2, T1, T2, SStar, CStar, TStar };

struct MomentFunctionKind {
    MomentKind tag = MomentKind::S1;
    double alpha = 1.0; // Star kinds only; TStar requires an integer

    void validate() const;
};

// Direct summation of the defining series, with tail estimates (monotone
// kinds) or alternating-series acceleration. Throws std::domain_error outside
// the summable region and NonConvergence when the tail bound cannot be met.
Complex series_value(MomentFunctionKind kind, Complex s, double a);

// The same function through its zeta-reference closed form, valid in the
// continued region (S1, S2, C1, C2, T1, T2 only).
Complex series_continuation(MomentFunctionKind kind, Complex s, double a);

// The integral (complex-moment) representation of each kind.
Complex integral_value(MomentFunctionKind kind, Complex s, double a);

// (s-1) zeta(s,a) = E(a-1+U2+iX)^{-s}/2 + (a-1) E(U1+iX)^{-s} with X the
// half-scale order-2 sinh law, a >= 1; evaluated by iterated quadrature.
Complex zeta_u2_representation(Complex s, double a);

enum class BernoulliRoute {
    Moment,     // E(a - 1/2 + iX)^s over the half-scale order-1 sinh law
    Functional, // -s zeta(1-s, a)
    Mixture,    // E(a-1+U2+iX)^{s-1}/2 + (a-1) E(U1+iX)^{s-1} over sinh order 2
};

Complex gen_bernoulli(Complex s, double a, BernoulliRoute route);

// (integral of x^{s-1} h_a(x), (s-1) Gamma(s) zeta(s,a)); both sides equal 1
// at s = 1 by continuity. Requires a >= 1 and Re(s) > 0.
std::pair<Complex, Complex> mellin_h_identity(Complex s, double a);

// (integral of |x|^s g_a(x), 2 Gamma(s+1) C1(s,a)); requires a > 1/2, s > -1.
std::pair<double, double> logistic_moment_identity(double s, double a);

} // namespace hyperzeta
