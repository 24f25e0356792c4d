#include "iva/function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iva/io.hpp"

namespace iva {

namespace {

constexpr std::size_t kValidationGrid = 1001;
constexpr double kClassSlack = 1e-12;
constexpr double kModulusCrossCheckSlack = 1e-9;

std::vector<double> sample_endpoint(const std::function<double(double)>& fn,
                                    const Grid& grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid.points)
        out.push_back(fn(x));
    return out;
}

} // namespace

Grid Grid::uniform(double a, double b, std::size_t n) {
    if (!(a < b))
        throw DomainError("grid domain must satisfy a < b");
    if (n < 2)
        throw DomainError("grid needs at least 2 points");
    Grid g;
    g.points.resize(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g.points[i] = a + static_cast<double>(i) * h;
    g.points.front() = a;
    g.points.back() = b;
    return g;
}

double Grid::max_spacing() const {
    double h = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        h = std::max(h, points[i + 1] - points[i]);
    return h;
}

IntervalFunction make_function(std::string name, double domain_lo, double domain_hi,
                               std::function<double(double)> lower,
                               std::function<double(double)> upper,
                               std::optional<std::function<double(double)>> modulus,
                               std::optional<double> lipschitz) {
    if (!(domain_lo < domain_hi))
        throw DomainError("function domain must satisfy a < b");
    IntervalFunction f;
    f.name = std::move(name);
    f.domain_lo = domain_lo;
    f.domain_hi = domain_hi;
    f.lower = std::move(lower);
    f.upper = std::move(upper);
    f.analytic_modulus = std::move(modulus);
    f.lipschitz = lipschitz;

    const Grid grid = Grid::uniform(domain_lo, domain_hi, kValidationGrid);
    for (double x : grid.points) {
        const double lo = f.lower(x);
        const double hi = f.upper(x);
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw InvalidFunction("endpoint function not finite at x=" + fmt_double(x));
        if (lo > hi)
            throw EndpointOrderError("lower(" + fmt_double(x) + ")=" + fmt_double(lo) +
                                         " exceeds upper=" + fmt_double(hi),
                                     x);
    }
    return f;
}

IntervalFunction parse_function(const std::string& lower_expr,
                                const std::string& upper_expr,
                                double domain_lo, double domain_hi,
                                std::optional<double> lipschitz) {
    ExprPtr lo_ast = parse_expr(lower_expr);
    ExprPtr hi_ast = parse_expr(upper_expr);
    auto lo_fn = [lo_ast](double x) { return eval_expr(*lo_ast, x); };
    auto hi_fn = [hi_ast](double x) { return eval_expr(*hi_ast, x); };
    return make_function("[" + to_string(lo_ast) + "," + to_string(hi_ast) + "]",
                         domain_lo, domain_hi, lo_fn, hi_fn, {}, lipschitz);
}

Interval eval(const IntervalFunction& f, double x) {
    if (x < f.domain_lo || x > f.domain_hi)
        throw DomainError("x=" + fmt_double(x) + " outside domain [" +
                          fmt_double(f.domain_lo) + "," + fmt_double(f.domain_hi) + "]");
    const double lo = f.lower(x);
    const double hi = f.upper(x);
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw InvalidFunction("endpoint invariant breached at x=" + fmt_double(x));
    return Interval(lo, hi);
}

SupMetricResult sup_metric(const IntervalFunction& f, const IntervalFunction& g,
                           const Grid& grid) {
    if (f.domain_lo != g.domain_lo || f.domain_hi != g.domain_hi)
        throw DomainMismatch("sup_metric requires identical domains");
    SupMetricResult r;
    for (double x : grid.points)
        r.grid_max = std::max(r.grid_max, hausdorff(eval(f, x), eval(g, x)));
    if (f.lipschitz && g.lipschitz)
        r.certified_upper =
            r.grid_max + (*f.lipschitz + *g.lipschitz) * grid.max_spacing() / 2.0;
    return r;
}

double modulus_grid_estimate(const IntervalFunction& f, double delta,
                             const Grid& grid) {
    if (delta <= 0.0)
        throw InvalidDelta("modulus requires delta > 0");
    std::vector<double> lo = sample_endpoint(f.lower, grid);
    std::vector<double> hi = sample_endpoint(f.upper, grid);
    double best = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            if (!(grid.points[j] - grid.points[i] < delta))
                break;
            const double d = std::max(std::fabs(lo[i] - lo[j]),
                                      std::fabs(hi[i] - hi[j]));
            best = std::max(best, d);
        }
    }
    return best;
}

double modulus(const IntervalFunction& f, double delta, const Grid& grid) {
    const double estimate = modulus_grid_estimate(f, delta, grid);
    if (!f.analytic_modulus)
        return estimate;
    const double exact = (*f.analytic_modulus)(delta);
    if (estimate > exact + kModulusCrossCheckSlack)
        throw InvalidFunction("grid modulus " + fmt_double(estimate) +
                              " exceeds analytic modulus " + fmt_double(exact) +
                              " for " + f.name);
    return exact;
}

std::string to_string(LengthClass c) {
    switch (c) {
    case LengthClass::NonIncreasing: return "NonIncreasing";
    case LengthClass::NonDecreasing: return "NonDecreasing";
    case LengthClass::Constant: return "Constant";
    case LengthClass::Neither: return "Neither";
    }
    return "?";
}

LengthClass length_monotonicity(const IntervalFunction& f, const Grid& grid) {
    double max_rise = 0.0;
    double max_fall = 0.0;
    double prev = f.upper(grid.points[0]) - f.lower(grid.points[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double len = f.upper(grid.points[i]) - f.lower(grid.points[i]);
        max_rise = std::max(max_rise, len - prev);
        max_fall = std::max(max_fall, prev - len);
        prev = len;
    }
    if (max_rise <= kClassSlack && max_fall <= kClassSlack)
        return LengthClass::Constant;
    if (max_rise <= kClassSlack)
        return LengthClass::NonIncreasing;
    if (max_fall <= kClassSlack)
        return LengthClass::NonDecreasing;
    return LengthClass::Neither;
}

IntervalFunction rescaled_to_unit(const IntervalFunction& f) {
    if (f.domain_lo == 0.0 && f.domain_hi == 1.0)
        return f;
    const double a = f.domain_lo;
    const double w = f.domain_hi - f.domain_lo;
    IntervalFunction g;
    g.name = f.name;
    g.domain_lo = 0.0;
    g.domain_hi = 1.0;
    g.lower = [fn = f.lower, a, w](double u) { return fn(a + u * w); };
    g.upper = [fn = f.upper, a, w](double u) { return fn(a + u * w); };
    if (f.analytic_modulus)
        g.analytic_modulus = [m = *f.analytic_modulus, w](double d) { return m(d * w); };
    if (f.lipschitz)
        g.lipschitz = *f.lipschitz * w;
    return g;
}

IntervalFunction pointwise_sum(const IntervalFunction& f, const IntervalFunction& h) {
    if (f.domain_lo != h.domain_lo || f.domain_hi != h.domain_hi)
        throw DomainMismatch("pointwise_sum requires identical domains");
    IntervalFunction g;
    g.name = f.name + "+" + h.name;
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    g.lower = [a = f.lower, b = h.lower](double x) { return a(x) + b(x); };
    g.upper = [a = f.upper, b = h.upper](double x) { return a(x) + b(x); };
    if (f.lipschitz && h.lipschitz)
        g.lipschitz = *f.lipschitz + *h.lipschitz;
    return g;
}

IntervalFunction reflected(const IntervalFunction& f) {
    const double s = f.domain_lo + f.domain_hi;
    IntervalFunction g;
    g.name = f.name + "~";
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    g.lower = [fn = f.lower, s](double x) { return fn(s - x); };
    g.upper = [fn = f.upper, s](double x) { return fn(s - x); };
    g.analytic_modulus = f.analytic_modulus;
    g.lipschitz = f.lipschitz;
    return g;
}

IntervalFunction catalog_function(const std::string& name) {
    const double pi = std::numbers::pi;
    if (name == "const01")
        return make_function("const01", 0.0, 1.0,
                             [](double) { return 0.0; },
                             [](double) { return 1.0; },
                             [](double) { return 0.0; }, 0.0);
    if (name == "line")
        return make_function("line", 0.0, 1.0,
                             [](double x) { return x; },
                             [](double x) { return x; },
                             [](double d) { return std::min(d, 1.0); }, 1.0);
    if (name == "tent")
        return make_function("tent", 0.0, 1.0,
                             [](double x) { return x - 1.0; },
                             [](double x) { return 1.0 - x; },
                             [](double d) { return std::min(d, 1.0); }, 1.0);
    if (name == "parab")
        return make_function("parab", 0.0, 1.0,
                             [](double x) { return x - x * x; },
                             [](double x) { return x + x * x; },
                             // sup of |x-y|(1+x+y) over |x-y| < d is d(3-d)
                             [](double d) {
                                 const double t = std::min(d, 1.0);
                                 return t * (3.0 - t);
                             },
                             3.0);
    if (name == "sinband")
        return make_function("sinband", 0.0, 1.0,
                             [](double x) { return std::sin(x) - 1.0; },
                             [](double x) { return std::sin(x) + 1.0; },
                             [](double d) { return std::sin(std::min(d, 1.0)); }, 1.0);
    if (name == "sinbump")
        return make_function("sinbump", 0.0, 1.0,
                             [pi](double x) { return -std::sin(pi * x); },
                             [pi](double x) { return std::sin(pi * x); },
                             [pi](double d) { return std::sin(pi * std::min(d, 0.5)); },
                             pi);
    throw DomainError("unknown catalog function '" + name + "'");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "const01", "line", "tent", "parab", "sinband", "sinbump",
    };
    return names;
}

} // namespace iva
