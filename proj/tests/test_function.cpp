#include "doctest.h"

#include <cmath>
#include <random>

#include "iva/function.hpp"

using namespace iva;

TEST_CASE("uniform grid hits both endpoints exactly") {
    const Grid g = Grid::uniform(0.0, 1.0, 11);
    CHECK(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g.max_spacing() == doctest::Approx(0.1));
    CHECK_THROWS_AS(Grid::uniform(1.0, 0.0, 11), DomainError);
    CHECK_THROWS_AS(Grid::uniform(0.0, 1.0, 1), DomainError);
}

TEST_CASE("pointwise evaluation") {
    const IntervalFunction degenerate = make_function(
        "sin-line", 0.0, 1.0, [](double x) { return std::sin(x); },
        [](double x) { return std::sin(x); });
    CHECK(eval(degenerate, 0.0) == Interval(0, 0));

    const IntervalFunction tent = catalog_function("tent");
    CHECK(eval(tent, 0.0) == Interval(-1, 1));

    const IntervalFunction parab = catalog_function("parab");
    CHECK(eval(parab, 0.5) == Interval(0.25, 0.75));

    CHECK_THROWS_AS(eval(tent, 1.5), DomainError);
    CHECK_THROWS_AS(eval(tent, -0.1), DomainError);
}

TEST_CASE("endpoint invariant breaches between validation points surface lazily") {
    // crosses only in a sliver that the 1001-point validation grid misses
    const IntervalFunction f = make_function(
        "sneaky", 0.0, 1.0, [](double) { return 0.0; },
        [](double x) { return std::fabs(x - 0.00037) < 1e-5 ? -1.0 : 1.0; });
    CHECK_THROWS_AS(eval(f, 0.00037), InvalidFunction);
    CHECK(eval(f, 0.5) == Interval(0, 1));
}

TEST_CASE("sup metric on grids") {
    const Grid grid = Grid::uniform(0.0, 1.0, 101);
    const IntervalFunction f = catalog_function("line");
    CHECK(sup_metric(f, f, grid).grid_max == 0.0);

    const IntervalFunction c1 = make_function(
        "c1", 0.0, 1.0, [](double) { return 0.0; }, [](double) { return 1.0; },
        {}, 0.0);
    const IntervalFunction c2 = make_function(
        "c2", 0.0, 1.0, [](double) { return 0.0; }, [](double) { return 2.0; },
        {}, 0.0);
    CHECK(sup_metric(c1, c2, grid).grid_max == 1.0);

    const IntervalFunction shifted = make_function(
        "line+0.1", 0.0, 1.0, [](double x) { return x + 0.1; },
        [](double x) { return x + 0.1; }, {}, 1.0);
    const SupMetricResult r = sup_metric(f, shifted, grid);
    CHECK(r.grid_max == doctest::Approx(0.1).epsilon(1e-12));
    REQUIRE(r.certified_upper.has_value());
    CHECK(*r.certified_upper == doctest::Approx(0.1 + 2.0 * 0.01 / 2.0));

    const IntervalFunction other_domain = make_function(
        "od", 0.0, 2.0, [](double x) { return x; }, [](double x) { return x; });
    CHECK_THROWS_AS(sup_metric(f, other_domain, grid), DomainMismatch);
}

TEST_CASE("sup metric is a pseudometric and refines monotonically") {
    const Grid g11 = Grid::uniform(0.0, 1.0, 11);
    const Grid g101 = Grid::uniform(0.0, 1.0, 101);
    const Grid g1001 = Grid::uniform(0.0, 1.0, 1001);

    for (const std::string& a : catalog_names()) {
        for (const std::string& b : catalog_names()) {
            const IntervalFunction fa = catalog_function(a);
            const IntervalFunction fb = catalog_function(b);
            CHECK(sup_metric(fa, fb, g101).grid_max ==
                  sup_metric(fb, fa, g101).grid_max);
            const double d11 = sup_metric(fa, fb, g11).grid_max;
            const double d101 = sup_metric(fa, fb, g101).grid_max;
            const double d1001 = sup_metric(fa, fb, g1001).grid_max;
            CHECK(d11 <= d101 + 1e-12);
            CHECK(d101 <= d1001 + 1e-12);
        }
    }

    // triangle inequality over catalog triples
    for (const std::string& a : catalog_names())
        for (const std::string& b : catalog_names())
            for (const std::string& c : catalog_names()) {
                const double ab =
                    sup_metric(catalog_function(a), catalog_function(b), g101)
                        .grid_max;
                const double bc =
                    sup_metric(catalog_function(b), catalog_function(c), g101)
                        .grid_max;
                const double ac =
                    sup_metric(catalog_function(a), catalog_function(c), g101)
                        .grid_max;
                CHECK(ac <= ab + bc + 1e-12);
            }
}

TEST_CASE("translation invariance lifts pointwise") {
    const Grid grid = Grid::uniform(0.0, 1.0, 101);
    for (const std::string& h_name : catalog_names()) {
        const IntervalFunction f = catalog_function("tent");
        const IntervalFunction g = catalog_function("parab");
        const IntervalFunction h = catalog_function(h_name);
        const double base = sup_metric(f, g, grid).grid_max;
        const double shifted =
            sup_metric(pointwise_sum(f, h), pointwise_sum(g, h), grid).grid_max;
        CHECK(shifted == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("modulus of continuity") {
    const Grid grid = Grid::uniform(0.0, 1.0, 1001);

    const IntervalFunction c = catalog_function("const01");
    CHECK(modulus(c, 0.3, grid) == 0.0);

    // tent endpoints are Lipschitz-1 lines, so omega(delta) = delta
    const IntervalFunction tent = catalog_function("tent");
    CHECK(modulus(tent, 0.25, grid) == 0.25);
    // grid pairs stay strictly inside delta, so the raw estimate undershoots
    const double est = modulus_grid_estimate(tent, 0.25, grid);
    CHECK(est < 0.25);
    CHECK(est == doctest::Approx(0.249).epsilon(1e-6));

    // sup_{|x-y|<1/2} |x^2 - y^2| = 0.75, attained near x=1, y -> 1/2
    const IntervalFunction sq = parse_function("x^2", "x^2+1", 0.0, 1.0);
    CHECK(modulus(sq, 0.5, grid) == doctest::Approx(0.75).epsilon(0.005));

    CHECK_THROWS_AS(modulus(tent, 0.0, grid), InvalidDelta);
    CHECK_THROWS_AS(modulus(tent, -1.0, grid), InvalidDelta);
}

TEST_CASE("modulus is monotone in delta") {
    const Grid grid = Grid::uniform(0.0, 1.0, 501);
    for (const std::string& name : catalog_names()) {
        const IntervalFunction f = catalog_function(name);
        double prev = 0.0;
        for (double delta : {0.05, 0.1, 0.2, 0.4, 0.8}) {
            const double m = modulus_grid_estimate(f, delta, grid);
            CHECK(m >= prev);
            prev = m;
        }
    }
}

TEST_CASE("analytic moduli dominate grid estimates") {
    const Grid grid = Grid::uniform(0.0, 1.0, 2001);
    for (const std::string& name : catalog_names()) {
        const IntervalFunction f = catalog_function(name);
        REQUIRE(f.analytic_modulus.has_value());
        for (double delta : {0.01, 0.1, 0.3, 0.7})
            CHECK(modulus_grid_estimate(f, delta, grid) <=
                  (*f.analytic_modulus)(delta) + 1e-9);
    }
}

TEST_CASE("length monotonicity classification") {
    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    CHECK(length_monotonicity(catalog_function("tent"), grid) ==
          LengthClass::NonIncreasing);
    CHECK(length_monotonicity(catalog_function("parab"), grid) ==
          LengthClass::NonDecreasing);
    CHECK(length_monotonicity(catalog_function("const01"), grid) ==
          LengthClass::Constant);
    CHECK(length_monotonicity(catalog_function("line"), grid) ==
          LengthClass::Constant);
    CHECK(length_monotonicity(catalog_function("sinband"), grid) ==
          LengthClass::Constant);
    CHECK(length_monotonicity(catalog_function("sinbump"), grid) ==
          LengthClass::Neither);
}

TEST_CASE("parse_function builds catalog-compatible functions") {
    const IntervalFunction f = parse_function("-(1-x)", "1-x", 0.0, 1.0);
    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    CHECK(length_monotonicity(f, grid) == LengthClass::NonIncreasing);
    const IntervalFunction tent = catalog_function("tent");
    CHECK(sup_metric(f, tent, grid).grid_max == 0.0);
}

TEST_CASE("parse_function rejects reversed endpoints and bad grammar") {
    try {
        parse_function("x", "x-1", 0.0, 1.0);
        FAIL("expected EndpointOrderError");
    } catch (const EndpointOrderError& e) {
        CHECK(e.violating_x == 0.0);
    }
    CHECK_THROWS_AS(parse_function("sin(x", "1", 0.0, 1.0), ParseError);
}

TEST_CASE("reflection swaps the length class") {
    const Grid grid = Grid::uniform(0.0, 1.0, 1001);
    const IntervalFunction tent = catalog_function("tent");
    CHECK(length_monotonicity(reflected(tent), grid) ==
          LengthClass::NonDecreasing);
    CHECK(eval(reflected(tent), 1.0) == eval(tent, 0.0));
}

TEST_CASE("rescaling to the unit domain preserves values and moduli") {
    const IntervalFunction f = make_function(
        "wide", 2.0, 5.0, [](double x) { return x - 5.0; },
        [](double x) { return 5.0 - x + 1.0; },
        [](double d) { return std::min(d, 3.0); }, 1.0);
    const IntervalFunction u = rescaled_to_unit(f);
    CHECK(u.domain_lo == 0.0);
    CHECK(u.domain_hi == 1.0);
    CHECK(eval(u, 0.0) == eval(f, 2.0));
    CHECK(eval(u, 1.0) == eval(f, 5.0));
    CHECK(eval(u, 0.5) == eval(f, 3.5));
    REQUIRE(u.lipschitz.has_value());
    CHECK(*u.lipschitz == doctest::Approx(3.0));
    REQUIRE(u.analytic_modulus.has_value());
    CHECK((*u.analytic_modulus)(0.5) == doctest::Approx(1.5));
}

TEST_CASE("unknown catalog names are rejected") {
    CHECK_THROWS_AS(catalog_function("nope"), DomainError);
}
