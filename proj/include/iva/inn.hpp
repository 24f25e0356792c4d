#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "iva/function.hpp"
#include "iva/interval.hpp"
#include "iva/sw.hpp"

namespace iva {

// Logistic activation with configurable steepness, evaluated without
// overflow on either tail.
struct Sigmoid {
    std::string kind = "logistic";
    double steepness = 1.0;

    double operator()(double t) const;
};

struct InnerTerm {
    double c = 0.0;     // real weight
    double theta = 0.0; // threshold, applied as sigmoid(x - theta)
};

struct NetworkUnit {
    Interval w;                   // interval output weight
    std::vector<InnerTerm> inner; // nonempty
};

// Single hidden layer mapping a real input to an interval:
//   H(x) = sum_i W_i * (sum_j c_ij * sigmoid(x - theta_ij)).
struct IntervalNetwork {
    std::vector<NetworkUnit> units;
    Sigmoid sigmoid;
    double domain_lo = 0.0;
    double domain_hi = 1.0;
};

Interval eval_network(const IntervalNetwork& net, double x);

struct FitConfig {
    std::size_t initial_terms = 1;
    std::size_t max_terms = 1024;
    double steepness = 0.0; // 0 picks a grid-matched default
};

struct UnitFit {
    double budget = 0.0;
    double grid_error = 0.0;
    std::size_t terms = 0;
    double weight_norm = 0.0; // d_H(J_i, 0)
};

struct FitReport {
    std::vector<UnitFit> units;
    std::size_t dropped_units = 0;     // J_i = [0,0] contribute nothing
    double decomposition_error = 0.0;  // certified error of the eps/2 stage
    double composition_bound = 0.0;    // decomposition + sum err_i * d_H(J_i,0)
    double grid_error = 0.0;           // observed D_inf(f, H) on the grid
    bool budgets_met = false;
};

// Staircase fit of a [0,1]-valued target: thresholds at uniform quantiles
// of the accumulated variation, weights equal to the level increments,
// plus one saturated constant term. The term count doubles until the grid
// sup error drops below the budget; past the cap this throws
// FitBudgetExceeded carrying the best achieved error.
std::vector<InnerTerm> fit_unit(const std::function<double(double)>& psi,
                                double budget, const Grid& grid,
                                const Sigmoid& sigmoid, const FitConfig& config,
                                double* achieved = nullptr);

// Realizes the two-stage decomposition: a dense-approximant stage with
// target eps/2 supplies (psi_i, J_i); each surviving psi_i is fitted
// within budget eps / (2 m d_H(J_i, 0)); the network uses W_i = J_i.
std::pair<IntervalNetwork, FitReport> fit_network(const IntervalFunction& f,
                                                  double epsilon,
                                                  const FitConfig& config,
                                                  const Grid& grid);

std::string network_to_json(const IntervalNetwork& net);
IntervalNetwork network_from_json(const std::string& text);

} // namespace iva
