#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iva/expr.hpp"
#include "iva/interval.hpp"

namespace iva {

// Uniform sampling grid over a closed domain. First and last points land
// exactly on the endpoints; spacing is (b-a)/(N-1).
struct Grid {
    std::vector<double> points;

    static Grid uniform(double a, double b, std::size_t n);

    std::size_t size() const { return points.size(); }
    double front() const { return points.front(); }
    double back() const { return points.back(); }
    double max_spacing() const;
};

// A continuous interval-valued function on [a, b], given by two endpoint
// functions. The optional analytic modulus is the exact omega(f, delta)
// for catalog entries (grid moduli systematically underestimate it, and
// the approximation bounds are only falsifiable against a trusted omega).
// The optional Lipschitz constant bounds both endpoint slopes and feeds
// the certified between-grid slack terms.
struct IntervalFunction {
    std::string name;
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    std::function<double(double)> lower;
    std::function<double(double)> upper;
    std::optional<std::function<double(double)>> analytic_modulus;
    std::optional<double> lipschitz;
};

// Validates lower <= upper (and finiteness) on a 1001-point grid and
// returns the assembled function. Throws EndpointOrderError with the first
// violating x, or InvalidFunction on non-finite samples.
IntervalFunction make_function(std::string name, double domain_lo, double domain_hi,
                               std::function<double(double)> lower,
                               std::function<double(double)> upper,
                               std::optional<std::function<double(double)>> modulus = {},
                               std::optional<double> lipschitz = {});

// Builds a function from endpoint expression text. Parse failures carry
// position and expected-token info.
IntervalFunction parse_function(const std::string& lower_expr,
                                const std::string& upper_expr,
                                double domain_lo, double domain_hi,
                                std::optional<double> lipschitz = {});

// Pointwise evaluation [lower(x), upper(x)].
Interval eval(const IntervalFunction& f, double x);

// Grid estimate of the sup metric D_inf(f, g), plus a certified upper
// bound when both functions carry Lipschitz constants:
//   upper = grid_max + (L_f + L_g) * h / 2.
struct SupMetricResult {
    double grid_max = 0.0;
    std::optional<double> certified_upper;
};

SupMetricResult sup_metric(const IntervalFunction& f, const IntervalFunction& g,
                           const Grid& grid);

// Modulus of continuity omega(f, delta) = sup { d_H(f(x), f(y)) : |x-y| < delta }.
// Returns the analytic value when the function carries one (after
// cross-checking that the grid estimate does not exceed it by more than
// 1e-9), otherwise the grid estimate.
double modulus(const IntervalFunction& f, double delta, const Grid& grid);

// Grid-pair estimate only, never the analytic shortcut.
double modulus_grid_estimate(const IntervalFunction& f, double delta,
                             const Grid& grid);

enum class LengthClass {
    NonIncreasing,
    NonDecreasing,
    Constant,
    Neither,
};

std::string to_string(LengthClass c);

// Classifies len(f)(x) = upper(x) - lower(x) on the grid, with 1e-12 slack.
LengthClass length_monotonicity(const IntervalFunction& f, const Grid& grid);

// Affine reparametrization of f onto [0, 1]. Modulus and Lipschitz data
// are rescaled along.
IntervalFunction rescaled_to_unit(const IntervalFunction& f);

// Pointwise Minkowski sum (f+h)(x) = f(x) + h(x); domains must match.
IntervalFunction pointwise_sum(const IntervalFunction& f, const IntervalFunction& h);

// Reflection f~(x) = f(lo + hi - x); swaps the length-monotonicity class.
IntervalFunction reflected(const IntervalFunction& f);

// Built-in catalog: const01, line, tent, parab, sinband, sinbump. Throws
// DomainError for unknown names.
IntervalFunction catalog_function(const std::string& name);
const std::vector<std::string>& catalog_names();

} // namespace iva
