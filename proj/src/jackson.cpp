#include "iva/jackson.hpp"

#include <algorithm>
#include <cmath>

#include "iva/io.hpp"

namespace iva {

namespace {

constexpr double kLengthSlack = 1e-12;

// Certified M with d_H(f(x), f(y)) <= 2M for all x, y: half the grid pair
// maximum plus Lipschitz slack for the between-grid movement of each arg.
double certified_half_diameter(const std::vector<Interval>& samples,
                               const IntervalFunction& f, double h) {
    double pair_max = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            pair_max = std::max(pair_max, hausdorff(samples[i], samples[j]));
    const double slack = f.lipschitz ? *f.lipschitz * h / 2.0 : 0.0;
    return pair_max / 2.0 + slack;
}

} // namespace

std::vector<Interval> sample_nodes(const IntervalFunction& f_unit, std::size_t n) {
    if (n < 1)
        throw DomainError("node sampling requires n >= 1");
    std::vector<Interval> nodes;
    nodes.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        nodes.push_back(
            eval(f_unit, static_cast<double>(j) / static_cast<double>(n)));
    return nodes;
}

JacksonApproximant build_jackson(const IntervalFunction& f, std::size_t n,
                                 double epsilon, const Grid& grid) {
    if (n < 1)
        throw DomainError("build_jackson requires n >= 1");
    if (!(epsilon > 0.0))
        throw DomainError("build_jackson requires epsilon > 0");

    const IntervalFunction fu = rescaled_to_unit(f);
    const Grid unit_grid = Grid::uniform(0.0, 1.0, grid.size());

    const LengthClass cls = length_monotonicity(fu, unit_grid);
    if (cls == LengthClass::Neither)
        throw NotMonotone("length of " + f.name +
                          " is neither nonincreasing nor nondecreasing");
    const LengthDirection dir = cls == LengthClass::NonDecreasing
                                    ? LengthDirection::NonDecreasing
                                    : LengthDirection::NonIncreasing;

    JacksonApproximant g;
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    g.n = n;
    g.direction = dir;
    g.nodes = sample_nodes(fu, n);

    for (std::size_t j = 0; j + 1 < g.nodes.size(); ++j) {
        const double lj = length(g.nodes[j]);
        const double lj1 = length(g.nodes[j + 1]);
        const bool ok = dir == LengthDirection::NonIncreasing
                            ? lj >= lj1 - kLengthSlack
                            : lj <= lj1 + kLengthSlack;
        if (!ok)
            throw NotMonotone("node lengths violate the " +
                              std::string(dir == LengthDirection::NonIncreasing
                                              ? "nonincreasing"
                                              : "nondecreasing") +
                              " direction at node " + std::to_string(j));
    }

    std::vector<Interval> samples;
    samples.reserve(unit_grid.size());
    for (double x : unit_grid.points)
        samples.push_back(eval(fu, x));
    const double big_m =
        certified_half_diameter(samples, fu, unit_grid.max_spacing());

    const double delta = 1.0 / (4.0 * static_cast<double>(n));
    double eps_prime = 0.25;
    if (big_m > 0.0)
        eps_prime = std::min(
            0.25, epsilon / (2.0 * static_cast<double>(n) * big_m));

    const auto orientation = dir == LengthDirection::NonIncreasing
                                 ? StepOrientation::StepDown
                                 : StepOrientation::StepUp;
    for (std::size_t j = 0; j < n; ++j) {
        const double a_j = static_cast<double>(j) / static_cast<double>(n);
        g.psis.push_back(transition(a_j, delta, eps_prime, orientation, 0.0, 1.0));
    }

    if (dir == LengthDirection::NonIncreasing) {
        g.base = g.nodes[n];
        for (std::size_t j = 0; j < n; ++j)
            g.diffs.push_back(gh_diff(g.nodes[j], g.nodes[j + 1]));
    } else {
        g.base = g.nodes[0];
        for (std::size_t j = 0; j < n; ++j)
            g.diffs.push_back(gh_diff(g.nodes[j + 1], g.nodes[j]));
    }

    JacksonReport& r = g.report;
    r.n = n;
    r.direction = dir == LengthDirection::NonIncreasing ? "nonincreasing"
                                                        : "nondecreasing";
    r.delta = delta;
    r.eps_prime = eps_prime;
    r.big_m = big_m;

    const double inv_n = 1.0 / static_cast<double>(n);
    double omega;
    if (fu.analytic_modulus) {
        omega = (*fu.analytic_modulus)(inv_n);
        r.omega_source = "analytic";
    } else if (fu.lipschitz) {
        omega = *fu.lipschitz * inv_n;
        r.omega_source = "lipschitz";
    } else {
        omega = modulus_grid_estimate(fu, inv_n, unit_grid);
        r.omega_source = "grid";
    }
    r.bound_2omega = 2.0 * omega;
    // In exact arithmetic 2nM * (eps/(2nM)) is exactly eps; the min guards
    // the rounded product.
    r.certified_error =
        2.0 * omega +
        std::min(epsilon, 2.0 * static_cast<double>(n) * big_m * eps_prime);

    for (std::size_t t = 0; t < unit_grid.size(); ++t) {
        const double x = unit_grid.points[t];
        Interval acc = g.base;
        for (std::size_t j = 0; j < n; ++j)
            acc = add(acc, scalar_mul(g.psis[j](x), g.diffs[j]));
        r.grid_error = std::max(r.grid_error, hausdorff(samples[t], acc));
    }
    return g;
}

Interval eval_jackson(const JacksonApproximant& g, double x) {
    if (x < g.domain_lo || x > g.domain_hi)
        throw DomainError("x outside approximant domain");
    const double u = g.domain_lo == 0.0 && g.domain_hi == 1.0
                         ? x
                         : (x - g.domain_lo) / (g.domain_hi - g.domain_lo);
    Interval acc = g.base;
    for (std::size_t j = 0; j < g.psis.size(); ++j)
        acc = add(acc, scalar_mul(g.psis[j](std::clamp(u, 0.0, 1.0)), g.diffs[j]));
    return acc;
}

double jackson_bound(const IntervalFunction& f, std::size_t n) {
    if (n < 1)
        throw DomainError("jackson_bound requires n >= 1");
    const IntervalFunction fu = rescaled_to_unit(f);
    const double inv_n = 1.0 / static_cast<double>(n);
    if (fu.analytic_modulus)
        return 2.0 * (*fu.analytic_modulus)(inv_n);
    if (fu.lipschitz)
        return 2.0 * *fu.lipschitz * inv_n;
    throw NoModulusAvailable(f.name +
                             " carries neither an analytic modulus nor a "
                             "Lipschitz bound");
}

} // namespace iva
