#include "iva/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "json.hpp"

#include "iva/function.hpp"
#include "iva/io.hpp"
#include "iva/jackson.hpp"
#include "iva/sw.hpp"

namespace iva {

namespace {

// Dyadic endpoints (multiples of 2^-20 in [-8, 8]) keep every Minkowski
// sum, scalar product and gH difference exact in double precision, so the
// equality laws can be asserted with zero slack.
class DyadicGen {
public:
    explicit DyadicGen(std::uint64_t seed) : rng_(seed) {}

    double real() {
        constexpr long scale = 1 << 20;
        std::uniform_int_distribution<long> d(-8 * scale, 8 * scale);
        return static_cast<double>(d(rng_)) / static_cast<double>(scale);
    }

    double nonneg_scalar() {
        constexpr long scale = 1 << 10;
        std::uniform_int_distribution<long> d(0, 4 * scale);
        return static_cast<double>(d(rng_)) / static_cast<double>(scale);
    }

    double positive_scalar() {
        constexpr long scale = 1 << 10;
        std::uniform_int_distribution<long> d(1, 4 * scale);
        return static_cast<double>(d(rng_)) / static_cast<double>(scale);
    }

    // Nonnegative dyadic length on the 2^-19 lattice, so that half-lengths
    // stay on the interval lattice.
    double dyadic_length() {
        constexpr long scale = 1 << 19;
        std::uniform_int_distribution<long> d(0, 4 * scale);
        return static_cast<double>(d(rng_)) / static_cast<double>(scale / 2);
    }

    Interval interval() {
        double a = real();
        double b = real();
        if (a > b)
            std::swap(a, b);
        return Interval(a, b);
    }

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(rng_);
    }

    double unit_real() {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

struct LawAccumulator {
    LawResult result;

    LawAccumulator(std::string name, double tolerance) {
        result.name = std::move(name);
        result.tolerance = tolerance;
    }

    void record(double violation, const std::string& repro) {
        ++result.cases;
        if (violation > result.max_violation) {
            result.max_violation = violation;
            result.worst_case = repro;
        }
    }

    LawResult finish() {
        result.passed = result.max_violation <= result.tolerance;
        return result;
    }
};

std::string pair_repro(const Interval& a, const Interval& b) {
    return "A=" + to_string(a) + " B=" + to_string(b);
}

} // namespace

std::vector<LawResult> run_metric_suite(std::uint64_t seed, std::size_t cases) {
    DyadicGen gen(seed);
    LawAccumulator symmetry("metric_symmetry", 0.0);
    LawAccumulator identity("metric_identity", 0.0);
    LawAccumulator triangle("metric_triangle", 0.0);
    LawAccumulator sums("dh_subadditive_over_sums", 0.0);
    LawAccumulator homog("dh_positive_homogeneity", 1e-12);
    LawAccumulator spread("dh_scalar_spread", 1e-12);
    LawAccumulator mixed("dh_mixed_scalar_bound", 0.0);
    LawAccumulator translation("dh_translation_invariance", 0.0);

    for (std::size_t i = 0; i < cases; ++i) {
        const Interval a = gen.interval();
        const Interval b = gen.interval();
        const Interval c = gen.interval();

        symmetry.record(std::fabs(hausdorff(a, b) - hausdorff(b, a)),
                        pair_repro(a, b));
        double id_violation = hausdorff(a, a);
        if (a != b && hausdorff(a, b) == 0.0)
            id_violation = std::max(id_violation, 1.0);
        identity.record(id_violation, pair_repro(a, b));
        triangle.record(
            std::max(0.0, hausdorff(a, c) - hausdorff(a, b) - hausdorff(b, c)),
            pair_repro(a, b) + " C=" + to_string(c));

        const std::size_t len = 1 + gen.index(8);
        Interval sum_a = Interval::zero();
        Interval sum_b = Interval::zero();
        double dist_sum = 0.0;
        std::string list_repro;
        for (std::size_t j = 0; j < len; ++j) {
            const Interval aj = gen.interval();
            const Interval bj = gen.interval();
            sum_a = add(sum_a, aj);
            sum_b = add(sum_b, bj);
            dist_sum += hausdorff(aj, bj);
            list_repro += pair_repro(aj, bj) + ";";
        }
        sums.record(std::max(0.0, hausdorff(sum_a, sum_b) - dist_sum), list_repro);

        const double alpha = gen.positive_scalar();
        const double beta = gen.nonneg_scalar();
        homog.record(std::fabs(hausdorff(scalar_mul(alpha, a), scalar_mul(alpha, b)) -
                               alpha * hausdorff(a, b)),
                     "alpha=" + fmt_double(alpha) + " " + pair_repro(a, b));
        spread.record(
            std::fabs(hausdorff(scalar_mul(alpha, a), scalar_mul(beta, a)) -
                      std::fabs(alpha - beta) * hausdorff(a, Interval::zero())),
            "alpha=" + fmt_double(alpha) + " beta=" + fmt_double(beta) +
                " A=" + to_string(a));
        mixed.record(
            std::max(0.0,
                     hausdorff(scalar_mul(alpha, a), scalar_mul(beta, b)) -
                         (std::fabs(alpha - beta) * hausdorff(a, Interval::zero()) +
                          beta * hausdorff(a, b))),
            "alpha=" + fmt_double(alpha) + " beta=" + fmt_double(beta) + " " +
                pair_repro(a, b));
        translation.record(
            std::fabs(hausdorff(add(a, c), add(b, c)) - hausdorff(a, b)),
            pair_repro(a, b) + " C=" + to_string(c));
    }

    return {symmetry.finish(), identity.finish(), triangle.finish(),
            sums.finish(),     homog.finish(),    spread.finish(),
            mixed.finish(),    translation.finish()};
}

std::vector<LawResult> run_gh_suite(std::uint64_t seed, std::size_t cases,
                                    const GhFn& gh_hook) {
    const GhFn gh = gh_hook
                        ? gh_hook
                        : [](const Interval& a, const Interval& b) {
                              return gh_diff(a, b);
                          };
    DyadicGen gen(seed);
    LawAccumulator self_zero("gh_self_zero", 0.0);
    LawAccumulator dist_zero("gh_distance_to_zero", 1e-12);
    LawAccumulator cancel("gh_cancellation_when_shorter", 0.0);
    LawAccumulator cases_law("gh_two_case_decomposition", 0.0);
    LawAccumulator singleton("gh_singleton_subtraction", 0.0);

    auto endpoint_gap = [](const Interval& x, const Interval& y) {
        return std::max(std::fabs(x.lo() - y.lo()), std::fabs(x.hi() - y.hi()));
    };

    for (std::size_t i = 0; i < cases; ++i) {
        const Interval a = gen.interval();
        const Interval b = gen.interval();

        const Interval aa = gh(a, a);
        self_zero.record(std::max(std::fabs(aa.lo()), std::fabs(aa.hi())),
                         "A=" + to_string(a));

        dist_zero.record(std::fabs(hausdorff(gh(a, b), Interval::zero()) -
                                   hausdorff(a, b)),
                         pair_repro(a, b));

        const Interval& shorter = length(a) <= length(b) ? a : b;
        const Interval& longer = length(a) <= length(b) ? b : a;
        cancel.record(
            endpoint_gap(add(shorter, gh(longer, shorter)), longer),
            pair_repro(shorter, longer));

        const Interval d = gh(a, b);
        const double case1 = endpoint_gap(add(b, d), a);
        const double case2 = endpoint_gap(add(a, scalar_mul(-1.0, d)), b);
        cases_law.record(std::min(case1, case2), pair_repro(a, b));

        const double u = gen.real();
        const double v = gen.real();
        const Interval sd = gh(Interval::singleton(u), Interval::singleton(v));
        singleton.record(std::max(std::fabs(sd.lo() - (u - v)),
                                  std::fabs(sd.hi() - (u - v))),
                         "a=" + fmt_double(u) + " b=" + fmt_double(v));
    }

    return {self_zero.finish(), dist_zero.finish(), cancel.finish(),
            cases_law.finish(), singleton.finish()};
}

std::vector<LawResult> run_telescope_suite(std::uint64_t seed,
                                           std::size_t chains) {
    DyadicGen gen(seed);
    LawAccumulator noninc("telescope_nonincreasing_reproduces", 0.0);
    LawAccumulator nondec("telescope_nondecreasing_reproduces", 0.0);

    for (std::size_t i = 0; i < chains; ++i) {
        const std::size_t len = 2 + gen.index(15); // chain of 2..16 intervals
        std::vector<double> lengths(len);
        for (double& l : lengths)
            l = gen.dyadic_length();
        std::sort(lengths.begin(), lengths.end(), std::greater<>());

        std::vector<Interval> chain;
        chain.reserve(len);
        for (double l : lengths) {
            const double c = gen.real();
            chain.emplace_back(c - l / 2.0, c + l / 2.0);
        }
        const std::size_t k = gen.index(len - 1);

        const Interval got =
            telescope_sum(chain, k, LengthDirection::NonIncreasing);
        noninc.record(std::max(std::fabs(got.lo() - chain[k].lo()),
                               std::fabs(got.hi() - chain[k].hi())),
                      "chain#" + std::to_string(i) + " k=" + std::to_string(k));

        std::reverse(chain.begin(), chain.end());
        const Interval got2 =
            telescope_sum(chain, k, LengthDirection::NonDecreasing);
        nondec.record(std::max(std::fabs(got2.lo() - chain[k + 1].lo()),
                               std::fabs(got2.hi() - chain[k + 1].hi())),
                      "chain#" + std::to_string(i) + " k=" + std::to_string(k));
    }

    return {noninc.finish(), nondec.finish()};
}

std::vector<LawResult> run_partition_suite(std::uint64_t seed,
                                           std::size_t random_points) {
    DyadicGen gen(seed);
    LawAccumulator sum_law("partition_sum_to_one", 1e-9);
    LawAccumulator locality("partition_locality_below_delta", 0.0);

    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    for (const std::string& name : catalog_names()) {
        const IntervalFunction f = catalog_function(name);
        for (double eps : {0.5, 0.2, 0.1}) {
            const Cover cover = build_cover(f, eps, grid);
            Approximant g = sw_approximant(f, eps, grid);

            auto check_sum = [&](double t) {
                const std::vector<double> psis = g.partition.eval_all(t);
                double s = 0.0;
                for (double p : psis)
                    s += p;
                sum_law.record(std::fabs(s - 1.0),
                               name + " eps=" + fmt_double(eps) +
                                   " t=" + fmt_double(t));
            };
            for (double t : grid.points)
                check_sum(t);
            const std::size_t extra = random_points / 18; // across 6 fns x 3 eps
            for (std::size_t i = 0; i < extra; ++i)
                check_sum(gen.unit_real());

            for (std::size_t e = 0; e < cover.entries.size(); ++e) {
                const CoverEntry& entry = cover.entries[e];
                for (std::size_t t = 0; t < grid.size(); ++t) {
                    if (t >= entry.v_lo && t <= entry.v_hi)
                        continue;
                    const double psi = g.partition.psi(e, grid.points[t]);
                    locality.record(
                        std::max(0.0, psi - g.report.delta),
                        name + " eps=" + fmt_double(eps) + " center#" +
                            std::to_string(e) + " t=" + fmt_double(grid.points[t]));
                }
            }
        }
    }

    return {sum_law.finish(), locality.finish()};
}

std::vector<LawResult> run_bound_suite(std::uint64_t) {
    LawAccumulator compliance("jackson_bound_compliance", 0.0);
    LawAccumulator convergence("jackson_error_nonincreasing_in_n", 1e-9);
    LawAccumulator observed("jackson_observed_within_certified", 1e-9);

    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    const double eps = 0.01;
    for (const char* name : {"tent", "parab"}) {
        const IntervalFunction f = catalog_function(name);
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t n : {4, 8, 16, 32}) {
            const JacksonApproximant g = build_jackson(f, n, eps, grid);
            const double bound = jackson_bound(f, n);
            const std::string repro =
                std::string(name) + " n=" + std::to_string(n);
            compliance.record(
                std::max(0.0, g.report.certified_error - (bound + eps)), repro);
            observed.record(
                std::max(0.0, g.report.grid_error - g.report.certified_error),
                repro);
            convergence.record(std::max(0.0, g.report.certified_error - prev),
                               repro);
            prev = g.report.certified_error;
        }
    }

    return {compliance.finish(), convergence.finish(), observed.finish()};
}

bool all_passed(const std::vector<LawResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const LawResult& r) { return r.passed; });
}

std::string verify_report_json(std::uint64_t seed) {
    std::vector<LawResult> all;
    for (auto& suite :
         {run_metric_suite(seed), run_gh_suite(seed), run_telescope_suite(seed),
          run_partition_suite(seed), run_bound_suite(seed)})
        all.insert(all.end(), suite.begin(), suite.end());

    nlohmann::json laws = nlohmann::json::array();
    for (const LawResult& r : all)
        laws.push_back({{"name", r.name},
                        {"cases", r.cases},
                        {"max_violation", r.max_violation},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed},
                        {"worst_case", r.worst_case}});
    nlohmann::json doc = {
        {"schema_version", 1},
        {"command", "verify"},
        {"seed", seed},
        {"all_passed", all_passed(all)},
        {"laws", laws},
    };
    return doc.dump(2);
}

} // namespace iva
