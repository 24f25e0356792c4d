#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "iva/interval.hpp"

using namespace iva;

namespace {

// Brute-force oracles over dense samples of the operand intervals. These
// stay independent of the endpoint formulas they check.
constexpr int kSamples = 400;

std::vector<double> dense(const Interval& a) {
    std::vector<double> pts(kSamples + 1);
    for (int i = 0; i <= kSamples; ++i)
        pts[i] = a.lo() + (a.hi() - a.lo()) * i / kSamples;
    return pts;
}

Interval oracle_add(const Interval& a, const Interval& b) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double x : dense(a))
        for (double y : dense(b)) {
            lo = std::min(lo, x + y);
            hi = std::max(hi, x + y);
        }
    return Interval(lo, hi);
}

Interval oracle_scale(double lambda, const Interval& a) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double x : dense(a)) {
        lo = std::min(lo, lambda * x);
        hi = std::max(hi, lambda * x);
    }
    return Interval(lo, hi);
}

// max{ max_a d(a,J), max_b d(I,b) } evaluated on dense samples.
double oracle_hausdorff(const Interval& a, const Interval& b) {
    auto point_to_set = [](double x, const std::vector<double>& set) {
        double best = std::numeric_limits<double>::infinity();
        for (double y : set)
            best = std::min(best, std::fabs(x - y));
        return best;
    };
    const std::vector<double> sa = dense(a);
    const std::vector<double> sb = dense(b);
    double worst = 0.0;
    for (double x : sa)
        worst = std::max(worst, point_to_set(x, sb));
    for (double y : sb)
        worst = std::max(worst, point_to_set(y, sa));
    return worst;
}

Interval rand_interval(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-8.0, 8.0);
    double a = d(rng), b = d(rng);
    if (a > b)
        std::swap(a, b);
    return Interval(a, b);
}

} // namespace

TEST_CASE("interval construction enforces ordering") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), InvalidInterval);
    CHECK_THROWS_AS(Interval(0.0, std::nan("")), InvalidInterval);
    const Interval s = Interval::singleton(3.0);
    CHECK(s.lo() == 3.0);
    CHECK(s.hi() == 3.0);
    CHECK(s.is_singleton());
}

TEST_CASE("minkowski addition") {
    CHECK(add(Interval(0, 0), Interval(3, 5)) == Interval(3, 5));
    CHECK(add(Interval(1, 2), Interval(-1, 1)) == Interval(0, 3));

    const Interval o = oracle_add(Interval(1, 2), Interval(-1, 1));
    CHECK(o.lo() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(o.hi() == doctest::Approx(3.0).epsilon(1e-9));

    // J + (-J) is not the zero element unless J is a singleton.
    CHECK(add(Interval(2, 4), Interval(-4, -2)) == Interval(-2, 2));
}

TEST_CASE("scalar multiplication") {
    CHECK(scalar_mul(1.0, Interval(2, 7)) == Interval(2, 7));
    CHECK(scalar_mul(0.0, Interval(2, 7)) == Interval(0, 0));
    CHECK(scalar_mul(-1.0, Interval(1, 2)) == Interval(-2, -1));

    const Interval o = oracle_scale(-1.0, Interval(1, 2));
    CHECK(o.lo() == doctest::Approx(-2.0));
    CHECK(o.hi() == doctest::Approx(-1.0));
}

TEST_CASE("hausdorff distance matches the max-min definition") {
    CHECK(hausdorff(Interval(1, 3), Interval(1, 3)) == 0.0);
    CHECK(hausdorff(Interval(1, 3), Interval(2, 5)) == 2.0);
    CHECK(hausdorff(Interval(0, 0), Interval(-2, 3)) == 3.0);

    CHECK(oracle_hausdorff(Interval(1, 3), Interval(2, 5)) ==
          doctest::Approx(2.0).epsilon(1e-2));
    CHECK(oracle_hausdorff(Interval(0, 0), Interval(-2, 3)) ==
          doctest::Approx(3.0).epsilon(1e-2));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Interval a = rand_interval(rng);
        const Interval b = rand_interval(rng);
        CHECK(oracle_hausdorff(a, b) ==
              doctest::Approx(hausdorff(a, b)).epsilon(0.05));
    }
}

TEST_CASE("gh difference and its defining cases") {
    CHECK(gh_diff(Interval(1, 4), Interval(1, 4)) == Interval(0, 0));

    const Interval c1 = gh_diff(Interval(5, 7), Interval(1, 2));
    CHECK(c1 == Interval(4, 5));
    // first defining case: A = B + C
    CHECK(add(Interval(1, 2), c1) == Interval(5, 7));

    const Interval c2 = gh_diff(Interval(1, 2), Interval(5, 7));
    CHECK(c2 == Interval(-5, -4));
    // second defining case: B = A + (-1) C
    CHECK(add(Interval(1, 2), scalar_mul(-1.0, c2)) == Interval(5, 7));

    // singleton subtraction degenerates to real subtraction
    CHECK(gh_diff(Interval::singleton(2.5), Interval::singleton(4.0)) ==
          Interval::singleton(-1.5));
}

TEST_CASE("length") {
    CHECK(length(Interval(3, 3)) == 0.0);
    CHECK(length(Interval(1, 4)) == 3.0);
    CHECK(length(add(Interval(0, 1), Interval(0, 2))) == 3.0);
}

TEST_CASE("gh properties on random intervals") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Interval a = rand_interval(rng);
        const Interval b = rand_interval(rng);
        CHECK(hausdorff(gh_diff(a, b), Interval::zero()) ==
              doctest::Approx(hausdorff(a, b)).epsilon(1e-12));
        if (length(a) <= length(b)) {
            const Interval r = add(a, gh_diff(b, a));
            CHECK(r.lo() == doctest::Approx(b.lo()).epsilon(1e-12));
            CHECK(r.hi() == doctest::Approx(b.hi()).epsilon(1e-12));
        }
    }
}

TEST_CASE("telescope sum, nonincreasing") {
    const std::vector<Interval> chain = {Interval(0, 4), Interval(1, 4),
                                         Interval(2, 4)};
    // direct oracle: [2,4] + ([1,4] gh [2,4]) + ([0,4] gh [1,4])
    Interval acc = chain[2];
    acc = add(acc, gh_diff(chain[1], chain[2]));
    acc = add(acc, gh_diff(chain[0], chain[1]));
    CHECK(acc == Interval(0, 4));

    CHECK(telescope_sum(chain, 0, LengthDirection::NonIncreasing) ==
          Interval(0, 4));
    CHECK(telescope_sum(chain, 1, LengthDirection::NonIncreasing) ==
          Interval(1, 4));
}

TEST_CASE("telescope sum, nondecreasing") {
    const std::vector<Interval> chain = {Interval(1, 2), Interval(0, 3),
                                         Interval(-1, 4)};
    Interval acc = chain[0];
    acc = add(acc, gh_diff(chain[1], chain[0]));
    acc = add(acc, gh_diff(chain[2], chain[1]));
    CHECK(acc == Interval(-1, 4));

    CHECK(telescope_sum(chain, 1, LengthDirection::NonDecreasing) ==
          Interval(-1, 4));
    CHECK(telescope_sum(chain, 0, LengthDirection::NonDecreasing) ==
          Interval(0, 3));
}

TEST_CASE("telescope sum of a constant chain is the constant") {
    const Interval a(2, 5);
    const std::vector<Interval> chain = {a, a, a};
    CHECK(telescope_sum(chain, 0, LengthDirection::NonIncreasing) == a);
    CHECK(telescope_sum(chain, 0, LengthDirection::NonDecreasing) == a);
}

TEST_CASE("telescope sum rejects bad chains") {
    const std::vector<Interval> up = {Interval(0, 1), Interval(0, 2)};
    CHECK_THROWS_AS(telescope_sum(up, 0, LengthDirection::NonIncreasing),
                    MonotonicityViolation);
    const std::vector<Interval> one = {Interval(0, 1)};
    CHECK_THROWS_AS(telescope_sum(one, 0, LengthDirection::NonIncreasing),
                    MonotonicityViolation);
    const std::vector<Interval> two = {Interval(0, 2), Interval(0, 1)};
    CHECK_THROWS_AS(telescope_sum(two, 1, LengthDirection::NonIncreasing),
                    MonotonicityViolation);
}

TEST_CASE("telescope sum is bit-exact on dyadic chains") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> endpoints(-(1L << 20), 1L << 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> len_dist(2, 16);
        const std::size_t len = len_dist(rng);
        std::vector<double> lens(len);
        for (double& l : lens)
            l = static_cast<double>(std::abs(endpoints(rng))) / (1 << 19);
        std::sort(lens.begin(), lens.end(), std::greater<>());
        std::vector<Interval> chain;
        for (double l : lens) {
            const double c = static_cast<double>(endpoints(rng)) / (1 << 20);
            chain.emplace_back(c - l / 2, c + l / 2);
        }
        std::uniform_int_distribution<std::size_t> k_dist(0, len - 2);
        const std::size_t k = k_dist(rng);
        const Interval got =
            telescope_sum(chain, k, LengthDirection::NonIncreasing);
        CHECK(got.lo() == chain[k].lo());
        CHECK(got.hi() == chain[k].hi());
    }
}

TEST_CASE("interval text form uses shortest round-trip decimals") {
    CHECK(to_string(Interval(0.1, 0.2)) == "[0.1,0.2]");
    CHECK(to_string(Interval(-1, 2)) == "[-1,2]");
}
