#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eass {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Discrete scheduling clock. All series in one run share one grid.
struct TimeGrid {
    int slots_per_day = 288;
    int slot_minutes = 5;
    int horizon_days = 1;

    void validate() const {
        if (slots_per_day <= 0 || slot_minutes <= 0 || horizon_days <= 0)
            throw ConfigError("TimeGrid fields must be positive");
        if (slots_per_day * slot_minutes != 1440)
            throw ConfigError("slots_per_day * slot_minutes must equal 1440");
    }

    int total_slots() const { return slots_per_day * horizon_days; }
    double slot_hours() const { return slot_minutes / 60.0; }
};

struct Transformer {
    std::string id;
    double capacity_kw = 0.0;        // C_i
    double overload_margin_kw = 0.0; // eta

    void validate() const {
        if (capacity_kw <= 0) throw ConfigError("transformer capacity must be positive: " + id);
        if (overload_margin_kw < 0 || overload_margin_kw >= capacity_kw)
            throw ConfigError("overload margin must be in [0, capacity): " + id);
    }
};

struct StorageUnit {
    double capacity_kwh = 0.0;   // B_i; zero models a transformer without storage
    double rate_limit_kw = 0.0;  // rho_i
    double initial_soc_kwh = 0.0;

    void validate() const {
        if (capacity_kwh < 0 || rate_limit_kw < 0)
            throw ConfigError("storage capacity and rate limit must be nonnegative");
        if (initial_soc_kwh < 0 || initial_soc_kwh > capacity_kwh)
            throw ConfigError("initial state of charge outside [0, capacity]");
    }
};

// Per-transformer load samples in kW, one value per slot.
struct LoadSeries {
    std::string transformer_id;
    std::vector<double> values;
};

struct FuelType {
    std::string name;
    double emission_factor_kg_per_mwh = 0.0; // w_f

    void validate() const {
        if (emission_factor_kg_per_mwh < 0)
            throw ConfigError("emission factor must be nonnegative: " + name);
    }
};

// Per-fuel weights over time; weights[f][t] >= 0 and sum to 1 at every slot.
struct MarginalFactorSeries {
    std::vector<std::string> fuels;
    std::vector<std::vector<double>> weights;

    std::size_t slot_count() const { return weights.empty() ? 0 : weights.front().size(); }
    void validate() const;
};

// Charge/discharge decisions in kWh per slot (positive = charge).
// State of charge is derived by forward accumulation from the start value.
struct Schedule {
    std::vector<double> x_kwh;
    double start_soc_kwh = 0.0;

    std::vector<double> soc_series() const {
        std::vector<double> s(x_kwh.size() + 1);
        s[0] = start_soc_kwh;
        for (std::size_t t = 0; t < x_kwh.size(); ++t) s[t + 1] = s[t] + x_kwh[t];
        return s;
    }
};

enum class ViolationKind {
    SocBelowZero,
    SocAboveCapacity,
    RateLimit,
    DischargeExceedsLoad,   // discharge larger than the load at the transformer
    OverloadMargin,         // charging into the transformer capacity margin
    BoundarySoc,
};

struct Violation {
    ViolationKind kind;
    int slot = 0;
    double amount_kwh = 0.0; // magnitude of the breach
    std::string message;
};

// Tolerance absorbing LP solver round-off when checking schedules.
inline constexpr double kScheduleTolKwh = 1e-6;

// c(t) = sum_f w_f * lambda_f(t), in kg/MWh per slot.
// Throws ConfigError when a fuel in `factors` has no matching FuelType.
std::vector<double> emission_cost_series(const MarginalFactorSeries& factors,
                                         const std::vector<FuelType>& fuels);

// sum_t c(t) * x(t) / 1000 in kg, where x(t) aggregates all transformers.
// Negative means emissions were reduced.
double schedule_emission_delta(const std::vector<std::vector<double>>& x_kwh_per_transformer,
                               const std::vector<double>& cost_kg_per_mwh);
double schedule_emission_delta(const std::vector<double>& x_kwh,
                               const std::vector<double>& cost_kg_per_mwh);

// Battery sized to sustain the series maximum for `hours` hours.
double size_storage(const LoadSeries& load, double hours);

// Checks a schedule against actual loads and the physical limits of the
// transformer and storage. `boundary_soc_kwh` additionally requires the state
// of charge to start and end at that value; pass nullopt to skip (used for
// realized schedules, whose endpoint drifts with real-time adjustments).
std::vector<Violation> validate_schedule(const Schedule& schedule,
                                         const std::vector<double>& actual_load_kw,
                                         const Transformer& transformer,
                                         const StorageUnit& storage,
                                         std::optional<double> boundary_soc_kwh,
                                         double slot_hours);

// Clamps negative (net-metered) samples to zero in place; returns the count.
std::size_t clamp_negative_loads(std::vector<double>& values);

}  // namespace eass
