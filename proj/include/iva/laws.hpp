#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "iva/interval.hpp"

namespace iva {

// Outcome of one randomized law check. `max_violation` is 0 for laws that
// hold exactly; `worst_case` reproduces the argmax inputs.
struct LawResult {
    std::string name;
    std::size_t cases = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string worst_case;
};

using GhFn = std::function<Interval(const Interval&, const Interval&)>;

// Metric axioms plus the five d_H properties (subadditivity over sums,
// positive homogeneity, scalar spread, the mixed bound, translation
// invariance). Random endpoints are dyadic so sums and scalar products
// are exact and the inequality laws admit zero float slack.
std::vector<LawResult> run_metric_suite(std::uint64_t seed,
                                        std::size_t cases = 10000);

// gH laws: self-difference, distance to zero, cancellation under the
// length condition, the two-case decomposition, singleton subtraction.
// The gh hook exists so tests can inject a broken implementation and
// watch the right law fail.
std::vector<LawResult> run_gh_suite(std::uint64_t seed,
                                    std::size_t cases = 10000,
                                    const GhFn& gh = nullptr);

// Telescoped cancellation over random monotone-length chains (length up
// to 16); the result must reproduce the target interval bit-exactly.
std::vector<LawResult> run_telescope_suite(std::uint64_t seed,
                                           std::size_t chains = 1000);

// Partition-of-unity sum and locality over the catalog, eps in
// {0.5, 0.2, 0.1}; random off-grid points are mixed into the sum check.
std::vector<LawResult> run_partition_suite(std::uint64_t seed,
                                           std::size_t random_points = 10000);

// Jackson bound compliance and convergence for tent and parab,
// n in {4, 8, 16, 32}, eps = 0.01, analytic moduli.
std::vector<LawResult> run_bound_suite(std::uint64_t seed);

bool all_passed(const std::vector<LawResult>& results);

// Full verify run as a single deterministic JSON document.
std::string verify_report_json(std::uint64_t seed);

} // namespace iva
