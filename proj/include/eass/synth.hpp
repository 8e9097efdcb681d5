#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eass/carbon.hpp"
#include "eass/csv.hpp"
#include "eass/domain.hpp"

namespace eass {

// Knobs of the seeded synthetic feeder: residential transformers with a
// double-peak diurnal profile, weekday/weekend shift, temperature coupling,
// AR(1) noise, optional rooftop solar, and an LMP curve that tracks the
// aggregate load.
struct SyntheticSpec {
    int n_transformers = 10;
    int horizon_days = 365;
    int slots_per_day = 288;
    int slot_minutes = 5;
    Date start{2021, 1, 1};
    int homes_min = 20;
    int homes_max = 120;
    double kw_per_home = 1.2;
    double noise_level = 0.08;   // stationary AR(1) std as a fraction of base load
    double solar_fraction = 0.0; // share of transformers with midday solar
    std::uint64_t seed = 1;

    void validate() const;
    TimeGrid grid() const { return {slots_per_day, slot_minutes, horizon_days}; }
};

// Everything a simulation run consumes, in memory and slot-aligned.
struct Dataset {
    TimeGrid grid;
    Date start;
    std::vector<Transformer> transformers; // overload margin left 0; the run applies eta
    std::vector<std::vector<double>> load_kw; // [transformer][slot], actuals
    std::vector<double> temperature_c;        // per slot
    std::vector<int> day_of_week;             // per day, 0 = Monday
    std::vector<std::string> month_of_day;    // per day, "YYYY-MM"
    std::vector<double> lmp_hourly;           // 24 per day
    FuelStatsTable fuel_stats;
    std::vector<FuelType> fuels;

    void validate() const;
};

// Default emission factors: coal, natural gas, oil (kg CO2 per MWh).
std::vector<FuelType> default_fuels();

// Smallest standard distribution-transformer size (kVA, taken as kW) whose
// 65%-loading point covers the series peak.
Transformer transformer_for_load(const std::string& id, const std::vector<double>& load_kw);

Dataset generate_synthetic(const SyntheticSpec& spec);

// Writes loads.csv, lmp.csv, temperature.csv, fuel_stats.csv, fuels.csv into
// `dir` (created if absent). Returns the paths in that order.
std::vector<std::string> write_dataset(const Dataset& data, const std::string& dir);

}  // namespace eass
