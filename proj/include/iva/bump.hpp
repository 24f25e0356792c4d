#pragma once

#include <cstdint>
#include <vector>

#include "iva/errors.hpp"

namespace iva {

// Exponent pair (m, n) denoting the step polynomial p(x) = (1 - x^m)^n on
// [0, 1]: p(0) = 1, p(1) = 0, strictly decreasing in between. For suitable
// exponents p stays above 1 - delta left of a and below delta right of b.
struct BumpPoly {
    long m = 1;
    long n = 1;
};

// (1 - x^m)^n, computed as exp(n * log1p(-x^m)) so that very large
// exponents keep the step shape instead of underflowing.
double eval_bump(const BumpPoly& p, double x);

// Largest slope of p on [0, 1]; used for certified between-grid slack.
double bump_lipschitz(const BumpPoly& p);

// Smallest (m, n), ordered by m then n, with p(a) > 1 - delta and
// p(b) < delta. Monotonicity of p makes the two-point check sufficient.
// Throws SearchExhausted past the exponent cap 2^20 (the underlying lemma
// guarantees existence, but not within bounded exponents).
BumpPoly step_poly(double a, double b, double delta);

enum class StepOrientation {
    StepDown, // ~1 left of the band, < eps' right of it
    StepUp,   // pointwise 1 minus a StepDown with identical parameters
};

// A step polynomial composed with the affine chart that maps
// [center - halfwidth, domain_hi] onto [0, 1], clamped at the left edge.
// The clamp produces an exact plateau left of the band. Anchoring the
// chart at the band rather than at domain_lo keeps exponents small: a raw
// (1 - x^m)^n step pinned to a mid-domain band needs n ~ (1/x)^m, far past
// any usable cap.
struct TransitionFn {
    BumpPoly base;
    double center = 0.0;
    double halfwidth = 0.0;
    double eps_prime = 0.0;
    StepOrientation orientation = StepOrientation::StepDown;
    double domain_lo = 0.0;
    double domain_hi = 1.0;

    double operator()(double t) const;
};

// Synthesizes a transition satisfying, for StepDown,
//   value(t) > 1 - eps_prime for t <= center - halfwidth,
//   value(t) < eps_prime     for t >= center + halfwidth,
// with conditions whose region misses the domain treated as vacuous.
TransitionFn transition(double center, double halfwidth, double eps_prime,
                        StepOrientation orientation,
                        double domain_lo, double domain_hi);

// Two-variable approximation of min(x, y) on [0, 1]^2 built from step
// polynomials: q(x, y) = (1/N) * sum_k u_k(x) u_k(y) with u_k a step-up at
// threshold (k - 1/2) / N. Exact staircase analysis gives
// |q - min| <= 1/N + 2 * tail, so the builder picks N and tail from the
// requested error with margin. Symmetric in (x, y) by construction.
struct MinApproxPoly {
    std::vector<TransitionFn> steps;
    double achieved_sup_error = 0.0;

    double operator()(double x, double y) const;
};

// Requires 0 < epsilon < 1/32; verifies on a 201x201 grid and records the
// achieved error.
MinApproxPoly min_poly(double epsilon);

} // namespace iva
