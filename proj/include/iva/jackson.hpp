#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iva/bump.hpp"
#include "iva/function.hpp"
#include "iva/interval.hpp"

namespace iva {

struct JacksonReport {
    std::size_t n = 0;
    std::string direction;        // "nonincreasing" | "nondecreasing"
    double delta = 0.0;           // transition halfwidth, 1/(4n)
    double eps_prime = 0.0;       // tail level eps/(2nM), capped at 1/4
    double big_m = 0.0;           // certified d_H(f(x), f(y)) <= 2*M
    double bound_2omega = 0.0;    // 2 * omega(f, 1/n)
    double certified_error = 0.0; // 2*omega + min(eps, 2nM*eps')
    double grid_error = 0.0;      // observed max d_H(f, g)
    std::string omega_source;     // "analytic" | "lipschitz" | "grid"
};

// Node-sampled approximant g in T_n. Nonincreasing length:
//   g(x) = A_n + sum_j psi_j(x) (A_j (-) A_{j+1}),    psi_j a step-down at j/n;
// nondecreasing length:
//   g(x) = A_0 + sum_j psi_j(x) (A_{j+1} (-) A_j),    psi_j a step-up at j/n.
// Constant length admits either; the builder uses the nonincreasing form.
struct JacksonApproximant {
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    std::size_t n = 0;
    LengthDirection direction = LengthDirection::NonIncreasing;
    std::vector<Interval> nodes;      // A_0..A_n on the unit reparametrization
    Interval base;                    // A_n or A_0
    std::vector<Interval> diffs;      // gH differences, j = 0..n-1
    std::vector<TransitionFn> psis;   // unit-domain transitions, j = 0..n-1
    JacksonReport report;
};

// A_j = f(j/n) for j = 0..n of a unit-domain function.
std::vector<Interval> sample_nodes(const IntervalFunction& f_unit, std::size_t n);

// Builds the approximant after rescaling f to [0, 1]. The grid sets the
// resolution used for classification, the diameter bound M and the
// observed error. Throws NotMonotone when the length class is Neither.
JacksonApproximant build_jackson(const IntervalFunction& f, std::size_t n,
                                 double epsilon, const Grid& grid);

// x in the original domain of f.
Interval eval_jackson(const JacksonApproximant& g, double x);

// 2 * omega(f, 1/n) from the analytic modulus, else 2 * L / n from the
// Lipschitz bound. Throws NoModulusAvailable when neither is present.
double jackson_bound(const IntervalFunction& f, std::size_t n);

} // namespace iva
