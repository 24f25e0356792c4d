#include "iva/inn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "iva/io.hpp"

namespace iva {

namespace {

using nlohmann::json;

double staircase_value(const std::vector<InnerTerm>& terms, const Sigmoid& s,
                       double x) {
    double acc = 0.0;
    for (const InnerTerm& t : terms)
        acc += t.c * s(x - t.theta);
    return acc;
}

} // namespace

double Sigmoid::operator()(double t) const {
    const double z = steepness * t;
    if (z >= 0.0)
        return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

Interval eval_network(const IntervalNetwork& net, double x) {
    if (x < net.domain_lo || x > net.domain_hi)
        throw DomainError("network input outside domain");
    Interval acc = Interval::zero();
    for (const NetworkUnit& unit : net.units) {
        double s = 0.0;
        for (const InnerTerm& t : unit.inner)
            s += t.c * net.sigmoid(x - t.theta);
        acc = add(acc, scalar_mul(s, unit.w));
    }
    return acc;
}

std::vector<InnerTerm> fit_unit(const std::function<double(double)>& psi,
                                double budget, const Grid& grid,
                                const Sigmoid& sigmoid, const FitConfig& config,
                                double* achieved) {
    if (!(budget > 0.0))
        throw DomainError("fit_unit requires a positive budget");

    const std::size_t n = grid.size();
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = psi(grid.points[i]);

    // Threshold far enough left that sigmoid(x - theta) is exactly 1 over
    // the whole domain, so a single term reproduces a constant level.
    const double saturated_theta =
        grid.front() - 800.0 / std::max(sigmoid.steepness, 1e-9);

    std::vector<double> cum(n, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        cum[i] = cum[i - 1] + std::fabs(values[i] - values[i - 1]);
    const double variation = cum[n - 1];

    auto measure = [&](const std::vector<InnerTerm>& terms) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, std::fabs(values[i] -
                                              staircase_value(terms, sigmoid,
                                                              grid.points[i])));
        return worst;
    };

    // Nearly constant target: one saturated term.
    {
        double lo = values[0], hi = values[0];
        for (double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::vector<InnerTerm> flat = {{(lo + hi) / 2.0, saturated_theta}};
        const double err = measure(flat);
        if (err < budget) {
            if (achieved)
                *achieved = err;
            return flat;
        }
    }

    // Index of the first grid point whose accumulated variation reaches v.
    auto quantile_index = [&](double v) {
        auto it = std::lower_bound(cum.begin(), cum.end(), v);
        return static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(it - cum.begin(),
                                     static_cast<std::ptrdiff_t>(n) - 1));
    };

    double best_err = std::numeric_limits<double>::infinity();
    std::vector<InnerTerm> best;
    for (std::size_t r = std::max<std::size_t>(1, config.initial_terms);;
         r *= 2) {
        std::vector<InnerTerm> terms = {{values[0], saturated_theta}};
        double prev_level = values[0];
        std::size_t prev_boundary = 0;
        for (std::size_t k = 1; k <= r; ++k) {
            const double vr = static_cast<double>(r);
            const std::size_t boundary =
                quantile_index(static_cast<double>(k) * variation / vr);
            const double level = values[boundary];
            const double c = level - prev_level;
            if (c == 0.0) {
                prev_boundary = std::max(prev_boundary, boundary);
                continue;
            }
            // Jumps sit strictly between grid points so that every grid
            // sample sees only saturated sigmoid terms; the staircase can
            // then interpolate the sampled levels exactly. The jump goes
            // where the accumulated variation of the segment crosses its
            // midpoint, which is where the mass of the level change lives.
            const double mid_cum = (cum[prev_boundary] + cum[boundary]) / 2.0;
            std::size_t j = prev_boundary + 1;
            while (j < boundary && cum[j] < mid_cum)
                ++j;
            const double theta = (grid.points[j - 1] + grid.points[j]) / 2.0;
            prev_level = level;
            prev_boundary = boundary;
            if (!terms.empty() && terms.back().theta == theta)
                terms.back().c += c; // merged thresholds on coarse grids
            else
                terms.push_back({c, theta});
        }
        const double err = measure(terms);
        if (err < best_err) {
            best_err = err;
            best = terms;
        }
        if (err < budget) {
            if (achieved)
                *achieved = err;
            return terms;
        }
        if (r >= config.max_terms)
            throw FitBudgetExceeded(
                "sigmoid fit reached " + std::to_string(r) + " terms with error " +
                    fmt_double(best_err) + " against budget " + fmt_double(budget),
                best_err);
    }
}

std::pair<IntervalNetwork, FitReport> fit_network(const IntervalFunction& f,
                                                  double epsilon,
                                                  const FitConfig& config,
                                                  const Grid& grid) {
    if (!(epsilon > 0.0))
        throw DomainError("fit_network requires epsilon > 0");

    const Approximant sw = sw_approximant(f, epsilon / 2.0, grid);

    IntervalNetwork net;
    net.domain_lo = f.domain_lo;
    net.domain_hi = f.domain_hi;
    net.sigmoid.kind = "logistic";
    net.sigmoid.steepness = config.steepness > 0.0
                                ? config.steepness
                                : 2.0 * std::log(1e6) / grid.max_spacing();

    FitReport report;
    report.decomposition_error = sw.report.certified ? sw.report.certified_error
                                                     : sw.report.grid_error;

    std::vector<std::size_t> surviving;
    for (std::size_t i = 0; i < sw.values.size(); ++i) {
        if (hausdorff(sw.values[i], Interval::zero()) > 0.0)
            surviving.push_back(i);
        else
            ++report.dropped_units;
    }
    const double m = static_cast<double>(surviving.size());

    report.budgets_met = true;
    for (std::size_t i : surviving) {
        const double norm = hausdorff(sw.values[i], Interval::zero());
        const double budget = epsilon / (2.0 * m * norm);
        auto psi = [&sw, i](double x) { return sw.partition.psi(i, x); };
        UnitFit fit;
        fit.budget = budget;
        fit.weight_norm = norm;
        NetworkUnit unit;
        unit.w = sw.values[i];
        unit.inner = fit_unit(psi, budget, grid, net.sigmoid, config,
                              &fit.grid_error);
        fit.terms = unit.inner.size();
        report.budgets_met = report.budgets_met && fit.grid_error < budget;
        report.units.push_back(fit);
        net.units.push_back(std::move(unit));
    }

    report.composition_bound = report.decomposition_error;
    for (const UnitFit& u : report.units)
        report.composition_bound += u.grid_error * u.weight_norm;

    for (double x : grid.points)
        report.grid_error =
            std::max(report.grid_error, hausdorff(eval(f, x), eval_network(net, x)));

    return {std::move(net), std::move(report)};
}

std::string network_to_json(const IntervalNetwork& net) {
    json units = json::array();
    for (const NetworkUnit& u : net.units) {
        json inner = json::array();
        for (const InnerTerm& t : u.inner)
            inner.push_back({{"c", t.c}, {"theta", t.theta}});
        units.push_back(
            {{"w", {{"lo", u.w.lo()}, {"hi", u.w.hi()}}}, {"inner", inner}});
    }
    json doc = {
        {"schema_version", 1},
        {"units", units},
        {"sigmoid", {{"kind", net.sigmoid.kind}, {"s", net.sigmoid.steepness}}},
        {"domain", {{"lo", net.domain_lo}, {"hi", net.domain_hi}}},
    };
    return doc.dump(2);
}

IntervalNetwork network_from_json(const std::string& text) {
    json doc = json::parse(text);
    IntervalNetwork net;
    net.sigmoid.kind = doc.at("sigmoid").at("kind").get<std::string>();
    net.sigmoid.steepness = doc.at("sigmoid").at("s").get<double>();
    net.domain_lo = doc.at("domain").at("lo").get<double>();
    net.domain_hi = doc.at("domain").at("hi").get<double>();
    for (const json& ju : doc.at("units")) {
        NetworkUnit u;
        u.w = Interval(ju.at("w").at("lo").get<double>(),
                       ju.at("w").at("hi").get<double>());
        for (const json& jt : ju.at("inner"))
            u.inner.push_back({jt.at("c").get<double>(),
                               jt.at("theta").get<double>()});
        if (u.inner.empty())
            throw InvalidFunction("network unit with empty inner list");
        net.units.push_back(std::move(u));
    }
    return net;
}

} // namespace iva
