#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iva/bump.hpp"
#include "iva/function.hpp"
#include "iva/interval.hpp"

namespace iva {

// One selected center of the greedy cover. V is the connected component,
// around the center, of the grid points with d_H(f(t), f(center)) below
// the radius; U is the same at half the radius. Both are stored as
// inclusive grid index ranges. Metric balls need not be connected for
// non-monotone distance profiles, so V is the component containing the
// center rather than the full ball; the transition machinery needs
// intervals and any subset of the ball keeps the error analysis valid.
struct CoverEntry {
    std::size_t center_idx = 0;
    double center = 0.0;
    double radius_eps = 0.0;
    std::size_t v_lo = 0, v_hi = 0;
    std::size_t u_lo = 0, u_hi = 0;
};

struct Cover {
    std::vector<CoverEntry> entries;
    Grid grid;
};

// Greedy cover: the first center sits at the domain midpoint; while grid
// points remain uncovered by the U ranges, the uncovered point farthest
// from f(center_1) in d_H becomes the next center, with radius epsilon/2.
// Throws CoverTooLarge past `cap` centers (epsilon too small for the
// grid/function pair).
Cover build_cover(const IntervalFunction& f, double epsilon, const Grid& grid,
                  std::size_t cap = 256);

// Bump product phi_i: rises across [V-edge, U-start], exact plateau 1 on
// U, falls across [U-end, V-edge]. Factors whose side of V touches the
// domain edge are vacuous and omitted.
struct PlateauFn {
    std::optional<TransitionFn> up;
    std::optional<TransitionFn> down;

    double operator()(double t) const;
};

// Telescoped partition of unity over the cover:
//   psi_1 = (1-phi_2)...(1-phi_m),  psi_i = (1-phi_2)...(1-phi_{i-1}) phi_i.
// The sum telescopes to 1 as an algebraic identity; each psi_i stays below
// delta outside V(x_i).
struct PartitionOfUnity {
    std::vector<PlateauFn> phis; // phi_2 .. phi_m

    std::size_t size() const { return phis.size() + 1; }

    // psi_1..psi_m at t, in cover order.
    std::vector<double> eval_all(double t) const;
    double psi(std::size_t i, double t) const; // i is 0-based
};

PartitionOfUnity build_partition(const Cover& cover, double delta, const Grid& grid);

struct SwReport {
    std::size_t m = 0;
    double delta = 0.0;
    double eps_prime = 0.0;       // effective eps' = eps/2 + L*h when certified
    double big_m = 0.0;           // certified sup_i D_inf(f, const f(x_i))
    double certified_error = 0.0; // eps' + delta * M * m, a uniform bound
    double grid_error = 0.0;      // observed max d_H(f, g) on the grid
    bool certified = false;       // false when f carries no Lipschitz bound
};

// g = sum_i psi_i * f(x_i), evaluated through Minkowski sums of
// nonnegative scalar multiples.
struct Approximant {
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    PartitionOfUnity partition;
    std::vector<Interval> values; // f(x_i), cover order
    SwReport report;
};

// Builds cover and partition, picks delta with delta*M*m below the
// remaining budget eps - eps', and certifies the sup error below epsilon.
// Throws CoverTooLarge or BudgetInfeasible.
Approximant sw_approximant(const IntervalFunction& f, double epsilon,
                           const Grid& grid, std::size_t cover_cap = 256);

Interval eval_approximant(const Approximant& g, double x);

// View of the approximant as an interval function (no modulus data).
IntervalFunction as_function(const Approximant& g);

} // namespace iva
