#include "iva/bump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iva/io.hpp"

namespace iva {

namespace {

constexpr long kExponentCap = 1L << 20;

} // namespace

double eval_bump(const BumpPoly& p, double x) {
    if (x < 0.0 || x > 1.0)
        throw DomainError("bump polynomial argument outside [0,1]");
    const double xm = std::pow(x, static_cast<double>(p.m));
    if (xm >= 1.0)
        return 0.0;
    if (xm == 0.0)
        return 1.0;
    return std::exp(static_cast<double>(p.n) * std::log1p(-xm));
}

double bump_lipschitz(const BumpPoly& p) {
    // |p'(x)| = n*m*x^(m-1)*(1-x^m)^(n-1); maximize on a fine grid with a
    // crude analytic fallback for the monotone tails.
    const double nm = static_cast<double>(p.n) * static_cast<double>(p.m);
    if (p.m == 1 && p.n == 1)
        return 1.0;
    double best = 0.0;
    const int samples = 2048;
    for (int i = 1; i < samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        const double xm = std::pow(x, static_cast<double>(p.m));
        if (xm >= 1.0)
            continue;
        const double logd = std::log(nm) +
                            (static_cast<double>(p.m) - 1.0) * std::log(x) +
                            (static_cast<double>(p.n) - 1.0) * std::log1p(-xm);
        best = std::max(best, std::exp(logd));
    }
    return best;
}

BumpPoly step_poly(double a, double b, double delta) {
    if (!(0.0 <= a && a < b && b <= 1.0))
        throw DomainError("step_poly requires 0 <= a < b <= 1");
    if (!(0.0 < delta && delta < 0.5))
        throw DomainError("step_poly requires 0 < delta < 1/2");

    const double log_delta = std::log(delta);
    const double log_keep = std::log1p(-delta); // log(1 - delta)

    for (long m = 1; m <= kExponentCap; ++m) {
        const double am = std::pow(a, static_cast<double>(m));
        const double bm = std::pow(b, static_cast<double>(m));

        // p(b)^1 >= ... condition (2) lower-bounds n, condition (1)
        // upper-bounds it; both via n*log(1-x^m) against the thresholds.
        double n_lo = 0.0;
        if (bm < 1.0) {
            n_lo = log_delta / std::log1p(-bm);
            if (!(n_lo < static_cast<double>(kExponentCap)))
                continue; // this m cannot satisfy (2) within the cap
        }
        double n_hi = std::numeric_limits<double>::infinity();
        if (am > 0.0)
            n_hi = log_keep / std::log1p(-am);
        if (n_hi < 1.0)
            continue;

        long candidate = std::max(1L, static_cast<long>(std::floor(n_lo)) + 1);
        // The closed form can be off by an ulp near integer boundaries;
        // verify directly and prefer the smallest passing n.
        for (long n = std::max(1L, candidate - 2); n <= candidate + 2; ++n) {
            if (n > kExponentCap)
                break;
            const BumpPoly p{m, n};
            if (eval_bump(p, a) > 1.0 - delta && eval_bump(p, b) < delta)
                return p;
        }
    }
    throw SearchExhausted("no step polynomial with exponents <= 2^20 for a=" +
                          fmt_double(a) + " b=" + fmt_double(b) +
                          " delta=" + fmt_double(delta));
}

double TransitionFn::operator()(double t) const {
    if (t < domain_lo || t > domain_hi)
        throw DomainError("transition argument outside its domain");
    const double band_lo = center - halfwidth;
    const double denom = domain_hi - band_lo;
    double u = denom > 0.0 ? (t - band_lo) / denom : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    const double down = eval_bump(base, u);
    return orientation == StepOrientation::StepDown ? down : 1.0 - down;
}

TransitionFn transition(double center, double halfwidth, double eps_prime,
                        StepOrientation orientation,
                        double domain_lo, double domain_hi) {
    if (!(domain_lo < domain_hi))
        throw DomainError("transition domain must satisfy lo < hi");
    if (!(halfwidth > 0.0))
        throw DomainError("transition halfwidth must be positive");
    if (!(eps_prime > 0.0 && eps_prime < 0.5))
        throw DomainError("transition eps_prime must lie in (0, 1/2)");
    if (center + halfwidth < domain_lo || center - halfwidth > domain_hi)
        throw DomainError("transition band does not meet the domain");

    TransitionFn fn;
    fn.center = center;
    fn.halfwidth = halfwidth;
    fn.eps_prime = eps_prime;
    fn.orientation = orientation;
    fn.domain_lo = domain_lo;
    fn.domain_hi = domain_hi;

    const double band_lo = center - halfwidth;
    const double denom = domain_hi - band_lo;
    if (denom <= 0.0) {
        // Band sits at the right edge; the decay condition is vacuous.
        fn.base = BumpPoly{1, 1};
        return fn;
    }
    const double b_param =
        std::min(1.0, (center + halfwidth - band_lo) / denom);
    fn.base = step_poly(0.0, b_param, eps_prime);
    return fn;
}

double MinApproxPoly::operator()(double x, double y) const {
    double acc = 0.0;
    for (const TransitionFn& u : steps)
        acc += u(x) * u(y);
    return acc / static_cast<double>(steps.size());
}

MinApproxPoly min_poly(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0 / 32.0))
        throw DomainError("min_poly requires 0 < epsilon < 1/32");

    // 1/N <= eps/2 and tails 2*eps'' = eps/4 leave a 25% margin against
    // the staircase bound |q - min| <= 1/N + 2*eps''.
    const auto n_steps = static_cast<std::size_t>(std::ceil(2.0 / epsilon));
    const double tail = epsilon / 8.0;
    const double halfwidth = 0.5 / static_cast<double>(n_steps);

    MinApproxPoly q;
    q.steps.reserve(n_steps);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double t_k =
            (static_cast<double>(k) - 0.5) / static_cast<double>(n_steps);
        q.steps.push_back(transition(t_k, halfwidth, tail,
                                     StepOrientation::StepUp, 0.0, 1.0));
    }

    const std::size_t grid_n = 201;
    std::vector<double> values(n_steps * grid_n);
    for (std::size_t k = 0; k < n_steps; ++k)
        for (std::size_t i = 0; i < grid_n; ++i)
            values[k * grid_n + i] =
                q.steps[k](static_cast<double>(i) / (grid_n - 1));

    double worst = 0.0;
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double x = static_cast<double>(i) / (grid_n - 1);
        for (std::size_t j = 0; j < grid_n; ++j) {
            const double y = static_cast<double>(j) / (grid_n - 1);
            double acc = 0.0;
            for (std::size_t k = 0; k < n_steps; ++k)
                acc += values[k * grid_n + i] * values[k * grid_n + j];
            acc /= static_cast<double>(n_steps);
            worst = std::max(worst, std::fabs(std::min(x, y) - acc));
        }
    }
    q.achieved_sup_error = worst;
    if (!(worst < epsilon))
        throw SearchExhausted("min approximation achieved " + fmt_double(worst) +
                              ", requested " + fmt_double(epsilon));
    return q;
}

} // namespace iva
