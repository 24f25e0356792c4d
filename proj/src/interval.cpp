#include "iva/interval.hpp"

#include <algorithm>
#include <cmath>

#include "iva/io.hpp"

namespace iva {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw InvalidInterval("interval endpoint is not finite");
    if (lo > hi)
        throw InvalidInterval("interval endpoints reversed: lo=" + fmt_double(lo) +
                              " > hi=" + fmt_double(hi));
}

Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval scalar_mul(double lambda, const Interval& a) {
    if (lambda >= 0.0)
        return Interval(lambda * a.lo(), lambda * a.hi());
    return Interval(lambda * a.hi(), lambda * a.lo());
}

double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::fabs(a.lo() - b.lo()), std::fabs(a.hi() - b.hi()));
}

Interval gh_diff(const Interval& a, const Interval& b) {
    const double dlo = a.lo() - b.lo();
    const double dhi = a.hi() - b.hi();
    return Interval(std::min(dlo, dhi), std::max(dlo, dhi));
}

double length(const Interval& a) {
    return a.hi() - a.lo();
}

Interval telescope_sum(std::span<const Interval> chain, std::size_t k,
                       LengthDirection direction) {
    const std::size_t n = chain.size();
    if (n < 2)
        throw MonotonicityViolation("telescope_sum needs a chain of length >= 2");
    if (k + 1 >= n)
        throw MonotonicityViolation("telescope_sum index k out of range");

    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double lj = length(chain[j]);
        const double lj1 = length(chain[j + 1]);
        const bool ok = direction == LengthDirection::NonIncreasing ? lj >= lj1
                                                                    : lj <= lj1;
        if (!ok)
            throw MonotonicityViolation("chain lengths not monotone at index " +
                                        std::to_string(j));
    }

    if (direction == LengthDirection::NonIncreasing) {
        Interval acc = chain[n - 1];
        for (std::size_t j = n - 1; j-- > k;)
            acc = add(acc, gh_diff(chain[j], chain[j + 1]));
        return acc;
    }
    Interval acc = chain[0];
    for (std::size_t j = 0; j <= k; ++j)
        acc = add(acc, gh_diff(chain[j + 1], chain[j]));
    return acc;
}

std::string to_string(const Interval& a) {
    return "[" + fmt_double(a.lo()) + "," + fmt_double(a.hi()) + "]";
}

} // namespace iva
