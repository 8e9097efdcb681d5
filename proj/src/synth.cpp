#include "eass/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "eass/rng.hpp"

namespace eass {

namespace {

constexpr double kTwoPi = 6.283185307179586;

double bump(double u) { return std::exp(-0.5 * u * u); }

}  // namespace

void SyntheticSpec::validate() const {
    grid().validate();
    if (n_transformers < 1) throw ConfigError("SyntheticSpec: need at least one transformer");
    if (homes_min < 1 || homes_max < homes_min)
        throw ConfigError("SyntheticSpec: bad homes range");
    if (kw_per_home <= 0) throw ConfigError("SyntheticSpec: kw_per_home must be positive");
    if (noise_level < 0) throw ConfigError("SyntheticSpec: noise_level must be nonnegative");
    if (solar_fraction < 0 || solar_fraction > 1)
        throw ConfigError("SyntheticSpec: solar_fraction outside [0,1]");
}

void Dataset::validate() const {
    grid.validate();
    const std::size_t slots = std::size_t(grid.total_slots());
    const std::size_t days = std::size_t(grid.horizon_days);
    if (transformers.size() != load_kw.size())
        throw ConfigError("Dataset: transformer/load arity mismatch");
    for (const auto& l : load_kw)
        if (l.size() != slots) throw ConfigError("Dataset: load series length mismatch");
    if (temperature_c.size() != slots) throw ConfigError("Dataset: temperature length mismatch");
    if (day_of_week.size() != days || month_of_day.size() != days)
        throw ConfigError("Dataset: per-day array length mismatch");
    if (lmp_hourly.size() != days * 24) throw ConfigError("Dataset: LMP length mismatch");
    if (fuels.empty() || fuel_stats.months.empty())
        throw ConfigError("Dataset: missing fuel data");
}

std::vector<FuelType> default_fuels() {
    return {{"coal", 962.97}, {"gas", 395.53}, {"oil", 933.94}};
}

Transformer transformer_for_load(const std::string& id, const std::vector<double>& load_kw) {
    if (load_kw.empty()) throw ConfigError("transformer_for_load: empty load series");
    static const double kSizes[] = {25, 50, 75, 100, 167, 250, 333, 500, 750};
    const double peak = *std::max_element(load_kw.begin(), load_kw.end());
    const double need = peak / 0.65; // size so the peak sits at 65% loading
    for (double s : kSizes)
        if (s >= need) return {id, s, 0.0};
    // beyond the largest standard unit: parallel 750s
    const double banks = std::ceil(need / 750.0);
    return {id, 750.0 * banks, 0.0};
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    const TimeGrid grid = spec.grid();
    const int T_d = grid.slots_per_day;
    const int days = grid.horizon_days;
    const std::size_t slots = std::size_t(grid.total_slots());
    const double slot_h = grid.slot_hours();

    Dataset data;
    data.grid = grid;
    data.start = spec.start;
    data.fuels = default_fuels();

    const std::int64_t day0 = days_from_civil(spec.start.year, spec.start.month, spec.start.day);
    data.day_of_week.resize(std::size_t(days));
    data.month_of_day.resize(std::size_t(days));
    for (int d = 0; d < days; ++d) {
        data.day_of_week[std::size_t(d)] = weekday_from_days(day0 + d);
        data.month_of_day[std::size_t(d)] = month_key(spec.start, d);
    }

    Rng root(spec.seed, "synth");

    // shared temperature: annual + diurnal sinusoids with slow AR(1) drift
    data.temperature_c.resize(slots);
    {
        Rng rng = root.substream("temperature");
        double drift = 0.0;
        for (std::size_t s = 0; s < slots; ++s) {
            const int d = int(s) / T_d;
            const double doy = double(d % 365);
            const double hour = double(int(s) % T_d) * slot_h;
            const double annual = 13.0 + 11.0 * std::sin(kTwoPi * (doy - 105.0) / 365.0);
            const double diurnal = 4.5 * std::cos(kTwoPi * (hour - 15.0) / 24.0);
            drift = 0.995 * drift + rng.normal(0.0, 0.08);
            data.temperature_c[s] = annual + diurnal + drift;
        }
    }

    // which transformers get rooftop solar
    const int n = spec.n_transformers;
    std::vector<char> has_solar(std::size_t(n), 0);
    {
        Rng rng = root.substream("solar");
        std::vector<int> idx(std::size_t(n), 0);
        for (int i = 0; i < n; ++i) idx[std::size_t(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(idx[std::size_t(i)], idx[rng.uniform_index(std::uint64_t(i) + 1)]);
        const int n_solar = int(std::lround(spec.solar_fraction * n));
        for (int k = 0; k < n_solar; ++k) has_solar[std::size_t(idx[std::size_t(k)])] = 1;
    }

    data.load_kw.assign(std::size_t(n), std::vector<double>(slots, 0.0));
    data.transformers.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        Rng rng = root.substream("load/" + std::to_string(i));
        const int homes =
            spec.homes_min + int(rng.uniform_index(std::uint64_t(spec.homes_max - spec.homes_min) + 1));
        const double base = homes * spec.kw_per_home;
        const double am_peak = 8.0 + rng.uniform(-0.7, 0.7);
        const double pm_peak = 19.0 + rng.uniform(-0.7, 0.7);
        const double am_amp = 0.45 * rng.uniform(0.85, 1.15);
        const double pm_amp = 0.75 * rng.uniform(0.85, 1.15);
        const double solar_amp = has_solar[std::size_t(i)] ? 0.35 * base : 0.0;
        // innovation sized so the stationary AR(1) std is noise_level * base
        const double phi = 0.97;
        const double innov = spec.noise_level * base * std::sqrt(1.0 - phi * phi);
        double noise = 0.0;

        auto& load = data.load_kw[std::size_t(i)];
        for (std::size_t s = 0; s < slots; ++s) {
            const int d = int(s) / T_d;
            const double hour = double(int(s) % T_d) * slot_h;
            const bool weekend = data.day_of_week[std::size_t(d)] >= 5;
            double shape = 0.55 + (weekend ? 0.55 : 1.0) * am_amp * bump((hour - am_peak) / 2.2) +
                           (weekend ? 0.9 : 1.0) * pm_amp * bump((hour - pm_peak) / 2.6);
            if (weekend) shape += 0.25 * bump((hour - 13.0) / 3.0);
            // the temperature-coupled part follows the annual cycle, so it is
            // gated with the noise: noise_level 0 yields an exactly
            // weekly-periodic series
            double hvac = 0.0;
            if (spec.noise_level > 0) {
                const double temp = data.temperature_c[s];
                hvac = 0.018 * std::max(temp - 18.0, 0.0) + 0.012 * std::max(8.0 - temp, 0.0);
                noise = phi * noise + rng.normal(0.0, innov);
            }
            double kw = base * (shape + hvac) + noise;
            if (solar_amp > 0.0) {
                const double doy = double(d % 365);
                const double season = 0.6 + 0.4 * std::cos(kTwoPi * (doy - 172.0) / 365.0);
                kw -= solar_amp * season * bump((hour - 12.5) / 2.5);
            }
            load[s] = std::max(kw, 0.0);
        }
        data.transformers.push_back(transformer_for_load("tx" + std::to_string(i), load));
    }

    // hourly LMP: convex in normalized aggregate load, plus peak spikes
    {
        const std::size_t hours = std::size_t(days) * 24;
        std::vector<double> agg(hours, 0.0);
        const int per_hour = T_d / 24;
        for (std::size_t h = 0; h < hours; ++h) {
            double sum = 0.0;
            for (int k = 0; k < per_hour; ++k)
                for (int i = 0; i < n; ++i)
                    sum += data.load_kw[std::size_t(i)][h * std::size_t(per_hour) + std::size_t(k)];
            agg[h] = sum / per_hour;
        }
        const double lo = *std::min_element(agg.begin(), agg.end());
        const double hi = *std::max_element(agg.begin(), agg.end());
        const double span = std::max(hi - lo, 1e-9);
        Rng rng = root.substream("lmp");
        data.lmp_hourly.resize(hours);
        for (std::size_t h = 0; h < hours; ++h) {
            const double norm = (agg[h] - lo) / span;
            double lmp = 22.0 + 55.0 * std::pow(norm, 1.6) + rng.normal(0.0, 1.2);
            if (norm > 0.92) lmp += rng.uniform(0.0, 60.0);
            data.lmp_hourly[h] = lmp;
        }
    }

    // monthly fuel price statistics with a mild seasonal gas swing
    {
        for (int d = 0; d < days; ++d) {
            const std::string& key = data.month_of_day[std::size_t(d)];
            if (!data.fuel_stats.months.empty() && data.fuel_stats.months.back() == key) continue;
            const int m = (spec.start.month - 1 + int(data.fuel_stats.months.size())) % 12;
            const double winter = std::cos(kTwoPi * m / 12.0); // +1 in January
            data.fuel_stats.months.push_back(key);
            data.fuel_stats.stats.push_back({
                {"coal", 21.0 + 1.5 * winter, 4.0},
                {"gas", 34.0 + 5.0 * winter, 7.0},
                {"oil", 75.0 + 4.0 * winter, 14.0},
            });
        }
    }

    data.validate();
    return data;
}

std::vector<std::string> write_dataset(const Dataset& data, const std::string& dir) {
    data.validate();
    std::filesystem::create_directories(dir);
    const auto p = [&](const char* name) { return (std::filesystem::path(dir) / name).string(); };
    std::vector<std::string> ids;
    for (const auto& t : data.transformers) ids.push_back(t.id);

    std::vector<std::string> paths = {p("loads.csv"), p("lmp.csv"), p("temperature.csv"),
                                      p("fuel_stats.csv"), p("fuels.csv")};
    write_load_csv(paths[0], data.start, data.grid, ids, data.load_kw);
    write_lmp_csv(paths[1], data.start, data.lmp_hourly);
    write_temperature_csv(paths[2], data.start, data.grid, data.temperature_c);
    write_fuel_stats_csv(paths[3], data.fuel_stats);
    write_fuel_table_csv(paths[4], data.fuels);
    return paths;
}

}  // namespace eass
