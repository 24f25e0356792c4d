#include "iva/sw.hpp"

#include <algorithm>
#include <cmath>

#include "iva/io.hpp"

namespace iva {

namespace {

// Inclusive index range of the connected run around `center` where
// d_H(f(t), f(center)) < radius.
std::pair<std::size_t, std::size_t> ball_component(
    const std::vector<Interval>& samples, std::size_t center, double radius) {
    std::size_t lo = center;
    while (lo > 0 && hausdorff(samples[lo - 1], samples[center]) < radius)
        --lo;
    std::size_t hi = center;
    while (hi + 1 < samples.size() &&
           hausdorff(samples[hi + 1], samples[center]) < radius)
        ++hi;
    return {lo, hi};
}

std::vector<Interval> sample(const IntervalFunction& f, const Grid& grid) {
    std::vector<Interval> out;
    out.reserve(grid.size());
    for (double x : grid.points)
        out.push_back(eval(f, x));
    return out;
}

} // namespace

Cover build_cover(const IntervalFunction& f, double epsilon, const Grid& grid,
                  std::size_t cap) {
    if (!(epsilon > 0.0))
        throw DomainError("cover requires epsilon > 0");
    const std::vector<Interval> samples = sample(f, grid);
    const std::size_t n = grid.size();

    Cover cover;
    cover.grid = grid;
    std::vector<bool> covered(n, false);

    auto add_center = [&](std::size_t idx) {
        CoverEntry e;
        e.center_idx = idx;
        e.center = grid.points[idx];
        e.radius_eps = epsilon / 2.0;
        std::tie(e.v_lo, e.v_hi) = ball_component(samples, idx, e.radius_eps);
        std::tie(e.u_lo, e.u_hi) = ball_component(samples, idx, e.radius_eps / 2.0);
        for (std::size_t t = e.u_lo; t <= e.u_hi; ++t)
            covered[t] = true;
        cover.entries.push_back(e);
    };

    const double mid = (grid.front() + grid.back()) / 2.0;
    std::size_t first = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::fabs(grid.points[i] - mid) < std::fabs(grid.points[first] - mid))
            first = i;
    add_center(first);

    for (;;) {
        std::size_t best = n;
        double best_d = -1.0;
        for (std::size_t t = 0; t < n; ++t) {
            if (covered[t])
                continue;
            const double d = hausdorff(samples[t], samples[first]);
            if (d > best_d) {
                best_d = d;
                best = t;
            }
        }
        if (best == n)
            break;
        if (cover.entries.size() >= cap)
            throw CoverTooLarge("cover exceeded " + std::to_string(cap) +
                                " centers; epsilon=" + fmt_double(epsilon) +
                                " too small for this grid/function pair");
        add_center(best);
    }
    return cover;
}

double PlateauFn::operator()(double t) const {
    double v = 1.0;
    if (up)
        v *= (*up)(t);
    if (down)
        v *= (*down)(t);
    return v;
}

std::vector<double> PartitionOfUnity::eval_all(double t) const {
    const std::size_t m = size();
    std::vector<double> out(m, 0.0);
    double prefix = 1.0; // (1-phi_2)...(1-phi_i) running product
    for (std::size_t j = 0; j < phis.size(); ++j) {
        const double phi = phis[j](t);
        out[j + 1] = prefix * phi;
        prefix *= 1.0 - phi;
    }
    out[0] = prefix;
    return out;
}

double PartitionOfUnity::psi(std::size_t i, double t) const {
    return eval_all(t)[i];
}

PartitionOfUnity build_partition(const Cover& cover, double delta,
                                 const Grid& grid) {
    if (!(delta > 0.0 && delta < 0.5))
        throw DomainError("partition requires 0 < delta < 1/2");
    const std::size_t last = grid.size() - 1;
    const double lo = grid.front();
    const double hi = grid.back();

    PartitionOfUnity part;
    for (std::size_t i = 1; i < cover.entries.size(); ++i) {
        const CoverEntry& e = cover.entries[i];
        PlateauFn phi;
        if (e.v_lo > 0) {
            const double a = grid.points[e.v_lo - 1];
            const double b = grid.points[e.u_lo];
            phi.up = transition((a + b) / 2.0, (b - a) / 2.0, delta / 2.0,
                                StepOrientation::StepUp, lo, hi);
        }
        if (e.v_hi < last) {
            const double a = grid.points[e.u_hi];
            const double b = grid.points[e.v_hi + 1];
            phi.down = transition((a + b) / 2.0, (b - a) / 2.0, delta / 2.0,
                                  StepOrientation::StepDown, lo, hi);
        }
        part.phis.push_back(std::move(phi));
    }
    return part;
}

Approximant sw_approximant(const IntervalFunction& f, double epsilon,
                           const Grid& grid, std::size_t cover_cap) {
    Cover cover = build_cover(f, epsilon, grid, cover_cap);
    const std::size_t m = cover.entries.size();
    const double h = grid.max_spacing();

    const std::vector<Interval> samples = sample(f, grid);

    // Certified sup_i sup_t d_H(f(t), f(x_i)) and the effective radius
    // bound; both carry Lipschitz slack for the between-grid points.
    const double slack_half = f.lipschitz ? *f.lipschitz * h / 2.0 : 0.0;
    double big_m = 0.0;
    for (const CoverEntry& e : cover.entries)
        for (const Interval& s : samples)
            big_m = std::max(big_m, hausdorff(s, samples[e.center_idx]));
    big_m += slack_half;

    const double eps_prime = epsilon / 2.0 + 2.0 * slack_half;

    Approximant g;
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    g.values.reserve(m);
    for (const CoverEntry& e : cover.entries)
        g.values.push_back(samples[e.center_idx]);

    double delta = 0.25;
    if (m > 1 && big_m > 0.0) {
        if (eps_prime >= epsilon)
            throw BudgetInfeasible("no delta budget left: eps'=" +
                                   fmt_double(eps_prime) + " >= eps=" +
                                   fmt_double(epsilon) + "; refine the grid");
        delta = std::min(0.25, (epsilon - eps_prime) /
                                   (2.0 * big_m * static_cast<double>(m)));
    }
    g.partition = build_partition(cover, delta, grid);

    SwReport& r = g.report;
    r.m = m;
    r.delta = delta;
    r.eps_prime = eps_prime;
    r.big_m = big_m;
    r.certified = f.lipschitz.has_value();
    // With one center the approximant is the constant f(x_1), whose sup
    // distance to f is exactly what big_m certifies.
    r.certified_error =
        m > 1 ? eps_prime + delta * big_m * static_cast<double>(m) : big_m;
    for (std::size_t t = 0; t < grid.size(); ++t)
        r.grid_error =
            std::max(r.grid_error,
                     hausdorff(samples[t], eval_approximant(g, grid.points[t])));
    return g;
}

Interval eval_approximant(const Approximant& g, double x) {
    if (x < g.domain_lo || x > g.domain_hi)
        throw DomainError("approximant argument outside domain");
    const std::vector<double> psis = g.partition.eval_all(x);
    Interval acc = Interval::zero();
    for (std::size_t i = 0; i < psis.size(); ++i)
        acc = add(acc, scalar_mul(psis[i], g.values[i]));
    return acc;
}

IntervalFunction as_function(const Approximant& g) {
    IntervalFunction f;
    f.name = "sw_approximant";
    f.domain_lo = g.domain_lo;
    f.domain_hi = g.domain_hi;
    f.lower = [&g](double x) { return eval_approximant(g, x).lo(); };
    f.upper = [&g](double x) { return eval_approximant(g, x).hi(); };
    return f;
}

} // namespace iva
