#include "doctest.h"

#include <cmath>
#include <random>

#include "iva/sw.hpp"

using namespace iva;

namespace {

const Grid kGrid = Grid::uniform(0.0, 1.0, 1001);

} // namespace

TEST_CASE("cover of a constant function is a single center") {
    const Cover c = build_cover(catalog_function("const01"), 0.5, kGrid);
    CHECK(c.entries.size() == 1);
    CHECK(c.entries[0].v_lo == 0);
    CHECK(c.entries[0].v_hi == kGrid.size() - 1);
}

TEST_CASE("cover of the identity band spaces centers by the radius") {
    const Cover c = build_cover(catalog_function("line"), 0.3, kGrid);
    // d_H(f(t), f(x)) = |t - x|; U radius eps/4 = 0.075 covers width 0.15
    CHECK(c.entries.size() == 7);
    CHECK(c.entries[0].center == 0.5);
    for (const CoverEntry& e : c.entries)
        CHECK(e.radius_eps == 0.15);
}

TEST_CASE("cover caps out when epsilon is hopeless") {
    CHECK_THROWS_AS(build_cover(catalog_function("line"), 1e-9, kGrid),
                    CoverTooLarge);
}

TEST_CASE("cover entries are verified metric-ball components") {
    for (const char* name : {"tent", "sinbump"}) {
        const IntervalFunction f = catalog_function(name);
        const Cover c = build_cover(f, 0.2, kGrid);
        std::vector<bool> in_u(kGrid.size(), false);
        for (const CoverEntry& e : c.entries) {
            const Interval fc = eval(f, e.center);
            CHECK(e.u_lo >= e.v_lo);
            CHECK(e.u_hi <= e.v_hi);
            CHECK(e.center_idx >= e.u_lo);
            CHECK(e.center_idx <= e.u_hi);
            for (std::size_t t = e.v_lo; t <= e.v_hi; ++t)
                CHECK(hausdorff(eval(f, kGrid.points[t]), fc) < e.radius_eps);
            for (std::size_t t = e.u_lo; t <= e.u_hi; ++t)
                in_u[t] = true;
        }
        // the U ranges jointly cover the grid, so the V ranges do too
        for (std::size_t t = 0; t < kGrid.size(); ++t)
            CHECK(in_u[t]);
        // everything outside V(x_1) lies in some U(x_j), j >= 2
        const CoverEntry& first = c.entries[0];
        for (std::size_t t = 0; t < kGrid.size(); ++t) {
            if (t >= first.v_lo && t <= first.v_hi)
                continue;
            bool found = false;
            for (std::size_t j = 1; j < c.entries.size() && !found; ++j)
                found = t >= c.entries[j].u_lo && t <= c.entries[j].u_hi;
            CHECK(found);
        }
    }
}

TEST_CASE("partition with a single center is identically one") {
    const Cover c = build_cover(catalog_function("const01"), 0.5, kGrid);
    const PartitionOfUnity p = build_partition(c, 0.25, kGrid);
    CHECK(p.size() == 1);
    for (double t : {0.0, 0.3, 1.0})
        CHECK(p.psi(0, t) == 1.0);
}

TEST_CASE("two- and three-center partitions obey the telescoping algebra") {
    const Cover c2 = build_cover(catalog_function("line"), 0.9, kGrid);
    REQUIRE(c2.entries.size() >= 2);
    const PartitionOfUnity p = build_partition(c2, 0.1, kGrid);

    for (double t : kGrid.points) {
        const std::vector<double> psis = p.eval_all(t);
        double sum = 0.0;
        for (double v : psis)
            sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    if (p.size() == 2) {
        // psi_2 = phi_2 and psi_1 = 1 - phi_2
        for (double t : {0.1, 0.5, 0.9}) {
            const double phi = p.phis[0](t);
            CHECK(p.psi(1, t) == phi);
            CHECK(p.psi(0, t) == 1.0 - phi);
        }
    }

    const Cover c3 = build_cover(catalog_function("line"), 0.45, kGrid);
    REQUIRE(c3.entries.size() >= 3);
    const PartitionOfUnity p3 = build_partition(c3, 0.1, kGrid);
    for (double t : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        // psi_2 + psi_3 = 1 - (1-phi_2)(1-phi_3), the induction base
        const double phi2 = p3.phis[0](t);
        const double phi3 = p3.phis[1](t);
        CHECK(p3.psi(1, t) + p3.psi(2, t) ==
              doctest::Approx(1.0 - (1.0 - phi2) * (1.0 - phi3))
                  .epsilon(1e-14));
    }
}

TEST_CASE("partition locality: psi_i below delta outside V(x_i)") {
    const IntervalFunction f = catalog_function("parab");
    const double eps = 0.2;
    const Cover cover = build_cover(f, eps, kGrid);
    const Approximant g = sw_approximant(f, eps, kGrid);
    REQUIRE(cover.entries.size() == g.report.m);
    for (std::size_t i = 0; i < cover.entries.size(); ++i) {
        const CoverEntry& e = cover.entries[i];
        for (std::size_t t = 0; t < kGrid.size(); ++t) {
            if (t >= e.v_lo && t <= e.v_hi)
                continue;
            CHECK(g.partition.psi(i, kGrid.points[t]) < g.report.delta);
        }
    }
}

TEST_CASE("sw approximant certifies below epsilon across the catalog") {
    for (const std::string& name : catalog_names()) {
        const IntervalFunction f = catalog_function(name);
        double prev = 1e9;
        for (double eps : {0.5, 0.2, 0.1}) {
            const Approximant g = sw_approximant(f, eps, kGrid);
            CHECK(g.report.certified);
            CHECK(g.report.certified_error < eps);
            CHECK(g.report.grid_error <= g.report.certified_error + 1e-9);
            // decreasing eps never increases the certified error
            CHECK(g.report.certified_error <= prev + 1e-12);
            prev = g.report.certified_error;
        }
    }
}

TEST_CASE("sw approximant regression values for tent") {
    const Approximant g = sw_approximant(catalog_function("tent"), 0.2, kGrid);
    CHECK(g.report.m == 19);
    CHECK(g.report.eps_prime == doctest::Approx(0.101));
    CHECK(g.report.certified_error == doctest::Approx(0.1505));
    CHECK(g.report.grid_error < 0.1);
}

TEST_CASE("constant functions reproduce exactly") {
    const Approximant g = sw_approximant(catalog_function("const01"), 0.5, kGrid);
    CHECK(g.report.m == 1);
    CHECK(g.report.certified_error == 0.0);
    CHECK(g.report.grid_error == 0.0);
    CHECK(eval_approximant(g, 0.37) == Interval(0, 1));
}

TEST_CASE("pointwise error decomposition bound") {
    const IntervalFunction f = catalog_function("sinband");
    const Approximant g = sw_approximant(f, 0.2, kGrid);
    const Cover cover = build_cover(f, 0.2, kGrid);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, kGrid.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const double x0 = kGrid.points[pick(rng)];
        const std::vector<double> psis = g.partition.eval_all(x0);
        double bound = 0.0;
        for (std::size_t i = 0; i < psis.size(); ++i)
            bound += psis[i] *
                     hausdorff(eval(f, x0), eval(f, cover.entries[i].center));
        CHECK(hausdorff(eval(f, x0), eval_approximant(g, x0)) <= bound + 1e-12);
    }
}

TEST_CASE("approximant evaluation folds nonnegative scalar multiples") {
    // phi(t) = 1 - t via the (1,1) bump anchored at band_lo = 0
    TransitionFn ramp;
    ramp.base = BumpPoly{1, 1};
    ramp.center = 0.25;
    ramp.halfwidth = 0.25;
    ramp.orientation = StepOrientation::StepDown;
    ramp.domain_lo = 0.0;
    ramp.domain_hi = 1.0;
    REQUIRE(ramp(0.5) == 0.5);

    Approximant g;
    g.domain_lo = 0.0;
    g.domain_hi = 1.0;
    g.partition.phis.push_back(PlateauFn{{}, ramp});
    g.values = {Interval(0, 2), Interval(2, 4)};

    // psi_1 = psi_2 = 1/2: the Minkowski fold gives [1,3]
    CHECK(eval_approximant(g, 0.5) == Interval(1, 3));

    // singleton weights reduce to the real convex combination
    g.values = {Interval(1, 1), Interval(2, 2)};
    CHECK(eval_approximant(g, 0.5) == Interval(1.5, 1.5));

    CHECK_THROWS_AS(eval_approximant(g, 2.0), DomainError);
}

TEST_CASE("approximant view as an interval function") {
    const Approximant g = sw_approximant(catalog_function("tent"), 0.3, kGrid);
    const IntervalFunction gf = as_function(g);
    CHECK(eval(gf, 0.25) == eval_approximant(g, 0.25));
}
