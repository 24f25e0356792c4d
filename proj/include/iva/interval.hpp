#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "iva/errors.hpp"

namespace iva {

// A nonempty closed bounded interval [lo, hi] of the real line.
//
// This is the value type everything else is built on: Minkowski sums,
// nonnegative and negative scalar multiples, the Pompeiu-Hausdorff metric
// and the generalized Hukuhara difference. All operations are pure and
// endpoints are ordinary doubles; no outward rounding is performed.
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}

    // Rejects lo > hi instead of swapping: a reversed pair is a caller bug.
    Interval(double lo, double hi);

    static Interval singleton(double v) { return Interval(v, v); }
    static Interval zero() { return Interval(0.0, 0.0); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool is_singleton() const { return lo_ == hi_; }

    friend bool operator==(const Interval& a, const Interval& b) = default;

private:
    double lo_;
    double hi_;
};

// Minkowski addition: {a + b : a in A, b in B}.
Interval add(const Interval& a, const Interval& b);

// Scalar multiple {lambda * a : a in A}; negative lambda reverses endpoints.
Interval scalar_mul(double lambda, const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator*(double lambda, const Interval& a) { return scalar_mul(lambda, a); }

// Pompeiu-Hausdorff distance: max(|a.lo - b.lo|, |a.hi - b.hi|).
double hausdorff(const Interval& a, const Interval& b);

// Generalized Hukuhara difference. Always exists:
//   C = [min(a.lo - b.lo, a.hi - b.hi), max(a.lo - b.lo, a.hi - b.hi)]
// and satisfies A = B + C or B = A + (-1)C.
Interval gh_diff(const Interval& a, const Interval& b);

// Interval diameter hi - lo.
double length(const Interval& a);

enum class LengthDirection {
    NonIncreasing,
    NonDecreasing,
};

// Cancellation sum over a chain A_0..A_n with monotone lengths.
//
// NonIncreasing: returns A_n + sum_{j=k}^{n-1} (A_j (-) A_{j+1}), which
// equals A_k. NonDecreasing: returns A_0 + sum_{j=0}^{k} (A_{j+1} (-) A_j),
// which equals A_{k+1}. Lengths are compared as computed, with no slack;
// throws MonotonicityViolation when the chain fails the precondition,
// since the cancellation law genuinely breaks without it.
Interval telescope_sum(std::span<const Interval> chain, std::size_t k,
                       LengthDirection direction);

// Shortest round-trip decimal text, "[lo,hi]".
std::string to_string(const Interval& a);

} // namespace iva
