#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eass/domain.hpp"
#include "eass/eass_lp.hpp"
#include "eass/forecast.hpp"
#include "eass/synth.hpp"

namespace eass {

enum class PolicyKind { OfflineOptimal, OnlineLP, PreDay, RobustRO };

struct Policy {
    PolicyKind kind = PolicyKind::OnlineLP;
    double gamma = 15.0; // budget of uncertainty, RobustRO only
};

std::string policy_name(const Policy& p);
Policy parse_policy(const std::string& name, double gamma = 15.0);
std::vector<Policy> default_policies(double gamma = 15.0);

// Slot-by-slot clamp of a planned schedule onto what the actual loads, the
// transformer margin, and the real state of charge admit. Total: never fails,
// counts the slots it had to adjust.
struct Projection {
    std::vector<double> x_kwh;
    std::vector<double> soc_kwh; // T + 1 entries
    int adjustments = 0;
};
Projection project_feasible(const std::vector<double>& planned_x_kwh,
                            const std::vector<double>& actual_load_kw, double start_soc_kwh,
                            const Transformer& transformer, const StorageUnit& storage,
                            double slot_hours);

// Emissions avoided by the realized schedule, in kg. Residual stored energy
// (soc_end - soc_start) is valued at the day's mean cost so that non-neutral
// days don't book free savings.
double daily_savings(const std::vector<double>& realized_x_kwh,
                     const std::vector<double>& cost_kg_per_mwh, double soc_start_kwh,
                     double soc_end_kwh);

// One scheduling day for one policy lane, fleet-wide.
struct DayInputs {
    TimeGrid grid; // one day
    std::vector<Transformer> transformers;
    std::vector<StorageUnit> storage;
    std::vector<std::vector<double>> forecast_kw;    // [i][t]
    std::vector<std::vector<double>> sigma_kw;       // [i][t]
    std::vector<std::vector<double>> actual_kw;      // [i][t]
    std::vector<std::vector<double>> prev_actual_kw; // empty on day 0
    std::vector<double> cost_today;                  // kg/MWh per slot
    std::vector<double> cost_prev;                   // empty on day 0
    std::vector<double> boundary_soc_kwh;            // planning boundary, B_i/2
    std::vector<double> soc_start_kwh;               // carried real state of charge
};

struct DayResult {
    int day = 0;
    bool skipped = false;
    std::string note;
    std::vector<std::vector<double>> planned_x_kwh;  // [i][t]
    std::vector<std::vector<double>> realized_x_kwh; // [i][t]
    std::vector<std::vector<double>> realized_soc_kwh; // [i][t+1]
    double savings_kg = 0.0;
    double soc_correction_kg = 0.0;
    int violations = 0;
    int adjustments = 0;
    int relaxed_slots = 0;
};

DayResult run_day(const Policy& policy, const DayInputs& in, int day_index = 0);

struct SimParams {
    std::vector<Policy> policies = default_policies();
    double battery_hours = 1.0;
    double rate_hours = 0.0; // <= 0 means the default rule: full charge in one hour
    double penetration = 1.0;
    double eta_fraction = 0.01;
    double gamma = 15.0;
    std::uint64_t seed = 1;
    LagSpec lags;
    double ridge = 1e-3;
    int training_days = 56;
    int refit_days = 28;
    int deviation_window_days = 28;
    double sigma_multiplier = 1.5;
    int warmup_days = 84;

    void validate() const;
};

struct PolicyReport {
    std::string name;
    double savings_kg = 0.0;
    double savings_pct = 0.0;
    long violations = 0;
    long adjustments = 0;
    long relaxed_slots = 0;
    std::vector<double> daily_savings_kg;
    std::vector<int> daily_violations;
};

struct AnnualReport {
    int first_eval_day = 0;
    int eval_days = 0;
    double baseline_kg = 0.0; // storage-free emissions over the evaluation window
    std::vector<double> daily_baseline_kg;
    std::vector<PolicyReport> policies;
    double mape_model_pct = 0.0;       // mean over transformer-days
    double mape_persistence_pct = 0.0; // previous-day copy, same slots
    std::vector<double> mape_by_transformer;
    std::vector<int> storage_subset; // transformer indices selected by penetration
};

// Marginal emission cost c(t) in kg/MWh for every slot of the horizon,
// from hourly LMP and the month's fuel price statistics.
std::vector<double> build_cost_series(const Dataset& data);

AnnualReport run_horizon(const SimParams& params, const Dataset& data);

struct SweepRow {
    std::string axis;
    double value = 0.0;
    std::string policy;
    double savings_pct = 0.0;
};

// axis: battery_hours | rate_hours | penetration | gamma
std::vector<SweepRow> sweep(const SimParams& params, const Dataset& data, const std::string& axis,
                            const std::vector<double>& values);

}  // namespace eass
