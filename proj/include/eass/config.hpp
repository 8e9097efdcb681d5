#pragma once

#include <string>
#include <vector>

#include "eass/sim.hpp"
#include "eass/synth.hpp"

namespace eass {

// One JSON document drives a run: input paths, the clock, the policy set, and
// every tuning knob, so that a run is reproducible from the file alone.
struct RunConfig {
    std::string loads_path = "data/loads.csv";
    std::string lmp_path = "data/lmp.csv";
    std::string fuel_stats_path = "data/fuel_stats.csv";
    std::string temperature_path = "data/temperature.csv";
    std::string fuels_path;             // optional; empty = built-in factors
    std::string output_dir = "out";
    std::string start_date = "2021-01-01";

    int slots_per_day = 288;
    int slot_minutes = 5;
    int horizon_days = 365;

    std::vector<std::string> policies = {"OfflineOptimal", "OnlineLP", "PreDay", "RobustRO"};
    double gamma = 15.0;
    double battery_hours = 1.0;
    double rate_hours = 0.0; // <= 0: full charge in one hour
    double penetration = 1.0;
    double eta_fraction = 0.01;
    std::uint64_t seed = 1;

    int p1 = 12, p2 = 3, p3 = 2;
    double ridge = 1e-3;
    int training_days = 56;
    int refit_days = 28;
    int deviation_window_days = 28;
    double sigma_multiplier = 1.5;
    int warmup_days = 84;

    // synthetic-data knobs, used by the synth subcommand
    int synth_transformers = 10;
    int synth_homes_min = 20;
    int synth_homes_max = 120;
    double synth_noise_level = 0.08;
    double synth_solar_fraction = 0.0;

    void validate() const;
    SimParams sim_params() const;
    SyntheticSpec synth_spec() const;
    TimeGrid grid() const { return {slots_per_day, slot_minutes, horizon_days}; }
};

std::string serialize_config(const RunConfig& config); // pretty JSON
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& config, const std::string& path);

// Reads the four (or five) CSVs referenced by the config into a Dataset,
// deriving transformer capacities, weekdays, and month keys.
Dataset load_dataset(const RunConfig& config);

}  // namespace eass
