#include "eass/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "eass/csv.hpp"

namespace eass {

using nlohmann::json;

void RunConfig::validate() const {
    grid().validate();
    if (policies.empty()) throw ConfigError("config: policies must not be empty");
    for (const auto& p : policies) parse_policy(p);
    sim_params().validate();
    synth_spec().validate();
    if (output_dir.empty()) throw ConfigError("config: output_dir must not be empty");
    parse_date(start_date);
}

SimParams RunConfig::sim_params() const {
    SimParams s;
    s.policies.clear();
    for (const auto& p : policies) s.policies.push_back(parse_policy(p, gamma));
    s.battery_hours = battery_hours;
    s.rate_hours = rate_hours;
    s.penetration = penetration;
    s.eta_fraction = eta_fraction;
    s.gamma = gamma;
    s.seed = seed;
    s.lags = {p1, p2, p3};
    s.ridge = ridge;
    s.training_days = training_days;
    s.refit_days = refit_days;
    s.deviation_window_days = deviation_window_days;
    s.sigma_multiplier = sigma_multiplier;
    s.warmup_days = warmup_days;
    return s;
}

SyntheticSpec RunConfig::synth_spec() const {
    SyntheticSpec sp;
    sp.n_transformers = synth_transformers;
    sp.horizon_days = horizon_days;
    sp.slots_per_day = slots_per_day;
    sp.slot_minutes = slot_minutes;
    sp.start = parse_date(start_date);
    sp.homes_min = synth_homes_min;
    sp.homes_max = synth_homes_max;
    sp.noise_level = synth_noise_level;
    sp.solar_fraction = synth_solar_fraction;
    sp.seed = seed;
    return sp;
}

namespace {

json to_json(const RunConfig& c) {
    return json{
        {"paths",
         {{"loads", c.loads_path},
          {"lmp", c.lmp_path},
          {"fuel_stats", c.fuel_stats_path},
          {"temperature", c.temperature_path},
          {"fuels", c.fuels_path},
          {"output_dir", c.output_dir}}},
        {"start_date", c.start_date},
        {"grid",
         {{"slots_per_day", c.slots_per_day},
          {"slot_minutes", c.slot_minutes},
          {"horizon_days", c.horizon_days}}},
        {"policies", c.policies},
        {"gamma", c.gamma},
        {"battery_hours", c.battery_hours},
        {"rate_hours", c.rate_hours},
        {"penetration", c.penetration},
        {"eta_fraction", c.eta_fraction},
        {"seed", c.seed},
        {"forecast",
         {{"p1", c.p1},
          {"p2", c.p2},
          {"p3", c.p3},
          {"ridge", c.ridge},
          {"training_days", c.training_days},
          {"refit_days", c.refit_days},
          {"deviation_window_days", c.deviation_window_days},
          {"sigma_multiplier", c.sigma_multiplier},
          {"warmup_days", c.warmup_days}}},
        {"synth",
         {{"transformers", c.synth_transformers},
          {"homes_min", c.synth_homes_min},
          {"homes_max", c.synth_homes_max},
          {"noise_level", c.synth_noise_level},
          {"solar_fraction", c.synth_solar_fraction}}},
    };
}

template <typename T>
void read_field(const json& j, const char* key, T& out) {
    if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace

std::string serialize_config(const RunConfig& config) { return to_json(config).dump(2) + "\n"; }

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig c;
    try {
        if (j.contains("paths")) {
            const json& p = j["paths"];
            read_field(p, "loads", c.loads_path);
            read_field(p, "lmp", c.lmp_path);
            read_field(p, "fuel_stats", c.fuel_stats_path);
            read_field(p, "temperature", c.temperature_path);
            read_field(p, "fuels", c.fuels_path);
            read_field(p, "output_dir", c.output_dir);
        }
        read_field(j, "start_date", c.start_date);
        if (j.contains("grid")) {
            const json& g = j["grid"];
            read_field(g, "slots_per_day", c.slots_per_day);
            read_field(g, "slot_minutes", c.slot_minutes);
            read_field(g, "horizon_days", c.horizon_days);
        }
        read_field(j, "policies", c.policies);
        read_field(j, "gamma", c.gamma);
        read_field(j, "battery_hours", c.battery_hours);
        read_field(j, "rate_hours", c.rate_hours);
        read_field(j, "penetration", c.penetration);
        read_field(j, "eta_fraction", c.eta_fraction);
        read_field(j, "seed", c.seed);
        if (j.contains("forecast")) {
            const json& f = j["forecast"];
            read_field(f, "p1", c.p1);
            read_field(f, "p2", c.p2);
            read_field(f, "p3", c.p3);
            read_field(f, "ridge", c.ridge);
            read_field(f, "training_days", c.training_days);
            read_field(f, "refit_days", c.refit_days);
            read_field(f, "deviation_window_days", c.deviation_window_days);
            read_field(f, "sigma_multiplier", c.sigma_multiplier);
            read_field(f, "warmup_days", c.warmup_days);
        }
        if (j.contains("synth")) {
            const json& s = j["synth"];
            read_field(s, "transformers", c.synth_transformers);
            read_field(s, "homes_min", c.synth_homes_min);
            read_field(s, "homes_max", c.synth_homes_max);
            read_field(s, "noise_level", c.synth_noise_level);
            read_field(s, "solar_fraction", c.synth_solar_fraction);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field has the wrong type: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void save_config(const RunConfig& config, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write config: " + path);
    out << serialize_config(config);
}

Dataset load_dataset(const RunConfig& config) {
    config.validate();
    Dataset data;
    data.grid = config.grid();
    data.start = parse_date(config.start_date);

    const auto series = read_load_csv(config.loads_path);
    const std::size_t slots = std::size_t(data.grid.total_slots());
    for (const auto& s : series) {
        if (s.values.size() != slots)
            throw ConfigError("load series for " + s.transformer_id + " has " +
                              std::to_string(s.values.size()) + " slots, expected " +
                              std::to_string(slots));
        data.transformers.push_back(transformer_for_load(s.transformer_id, s.values));
        data.load_kw.push_back(s.values);
    }
    if (data.transformers.empty()) throw ConfigError("no load series in " + config.loads_path);

    data.temperature_c = read_temperature_csv(config.temperature_path);
    data.lmp_hourly = read_lmp_csv(config.lmp_path);
    data.fuel_stats = read_fuel_stats_csv(config.fuel_stats_path);
    data.fuels = config.fuels_path.empty() ? default_fuels()
                                           : read_fuel_table_csv(config.fuels_path);

    const std::int64_t day0 = days_from_civil(data.start.year, data.start.month, data.start.day);
    for (int d = 0; d < data.grid.horizon_days; ++d) {
        data.day_of_week.push_back(weekday_from_days(day0 + d));
        data.month_of_day.push_back(month_key(data.start, d));
    }
    data.validate();
    return data;
}

}  // namespace eass
