#pragma once

#include <utility>
#include <vector>

#include "eass/domain.hpp"
#include "eass/linprog.hpp"

namespace eass {

// One day of scheduling inputs compiled for the optimizer. Loads and
// deviations are in kW; decisions come out in kWh per slot.
struct EassInstance {
    TimeGrid grid;                          // one day: horizon_days == 1
    std::vector<Transformer> transformers;
    std::vector<StorageUnit> storage;
    std::vector<std::vector<double>> load_kw;   // [i][t] forecast or actual means
    std::vector<std::vector<double>> sigma_kw;  // [i][t]; all zero for offline use
    std::vector<double> cost_kg_per_mwh;        // c(t)
    std::vector<double> boundary_soc_kwh;       // per storage; B_i/2 by default
    double gamma = 0.0;                         // budget of uncertainty, in [0, T]

    void validate() const;
    int slots() const { return grid.total_slots(); }
    int transformer_count() const { return int(transformers.size()); }
};

// Closed-form solution of max sum sigma(t) z(t) s.t. sum z <= gamma, z in [0,1]:
// z = 1 on the floor(gamma) largest deviations, the fraction on the next,
// ties broken toward the earlier slot. Returned in original slot order.
std::vector<double> inner_budget_allocation(const std::vector<double>& sigma, double gamma);

// Deterministic (nominal) formulation: box bounds on x from the rate limit and
// the load/capacity constraints, state of charge eliminated into cumulative-sum
// range rows, and a terminal equality returning the state of charge to the
// boundary value. Objective: sum_t c(t) * sum_i x_i(t) / 1000 (kg).
LinearProgram build_eass(const EassInstance& instance);

// Robust counterpart: per transformer, beta(t) = sigma(t) * z*(t) tightens the
// discharge bound (load low) and the charge headroom (load high). Slots whose
// worst-case headroom turns negative are relaxed to "no charging" and reported
// through `relaxed_slots` as (transformer, slot) pairs when non-null.
LinearProgram build_eass_ro(const EassInstance& instance,
                            std::vector<std::pair<int, int>>* relaxed_slots = nullptr);

// Exhaustive lattice search over x_i(t) in multiples of grid_step, filtered by
// the storage and transformer constraints plus the terminal equality. Only for
// tiny instances (n*T <= 8 decision variables).
struct OracleResult {
    bool feasible = false;
    double objective_kg = 0.0;
    std::vector<std::vector<double>> x_kwh; // [i][t]
};
OracleResult brute_force_oracle(const EassInstance& instance, double grid_step,
                                bool robust = false);

// Convenience driver: builds the (robust) LP, solves per transformer with row
// generation, and unpacks x and the state-of-charge trajectory.
struct EassSolution {
    SolveStatus status = SolveStatus::NumericalFailure;
    double objective_kg = 0.0;
    std::vector<std::vector<double>> x_kwh; // [i][t]
    std::vector<std::vector<double>> soc_kwh; // [i][t+1]
    std::vector<std::pair<int, int>> relaxed_slots;
    std::string message;
};
EassSolution solve_eass(const EassInstance& instance, bool robust);

}  // namespace eass
