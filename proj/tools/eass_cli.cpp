#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eass/config.hpp"
#include "eass/csv.hpp"
#include "eass/sim.hpp"
#include "eass/synth.hpp"

namespace {

// distinct exit codes so scripts can tell failure modes apart
constexpr int kExitOk = 0;
constexpr int kExitError = 1;       // anything unexpected
constexpr int kExitBadConfig = 2;   // malformed or invalid configuration
constexpr int kExitMissingData = 3; // referenced input unreadable or malformed
constexpr int kExitWarmup = 4;      // horizon shorter than the warmup window
constexpr int kExitViolations = 5;  // realized schedules breached a constraint

using eass::ConfigError;
using eass::RunConfig;

RunConfig load_or_die(const std::string& path) {
    try {
        RunConfig cfg = eass::load_config(path);
        if (const char* dir = std::getenv("EASS_OUTPUT_DIR"); dir && *dir) cfg.output_dir = dir;
        return cfg;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::exit(kExitBadConfig);
    }
}

eass::Dataset dataset_or_die(const RunConfig& cfg) {
    try {
        return eass::load_dataset(cfg);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::exit(kExitMissingData);
    }
}

std::ofstream open_report(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", path.string().c_str());
        std::exit(kExitError);
    }
    return out;
}

void write_report_csv(const std::filesystem::path& path, const eass::AnnualReport& rep) {
    auto out = open_report(path);
    out << "day,policy,savings_kg,savings_pct,violations\n";
    char buf[80];
    for (const auto& pol : rep.policies) {
        for (int k = 0; k < rep.eval_days; ++k) {
            const double base = rep.daily_baseline_kg[std::size_t(k)];
            const double sav = pol.daily_savings_kg[std::size_t(k)];
            std::snprintf(buf, sizeof buf, "%.6f,%.6f", sav, base > 0 ? 100.0 * sav / base : 0.0);
            out << (rep.first_eval_day + k) << ',' << pol.name << ',' << buf << ','
                << pol.daily_violations[std::size_t(k)] << '\n';
        }
    }
}

void write_summary_json(const std::filesystem::path& path, const RunConfig& cfg,
                        const eass::AnnualReport& rep) {
    nlohmann::json j;
    j["seed"] = cfg.seed;
    j["first_eval_day"] = rep.first_eval_day;
    j["eval_days"] = rep.eval_days;
    j["baseline_kg"] = rep.baseline_kg;
    j["storage_subset"] = rep.storage_subset;
    j["mape"] = {{"model_pct", rep.mape_model_pct},
                 {"persistence_pct", rep.mape_persistence_pct},
                 {"by_transformer", rep.mape_by_transformer}};
    for (const auto& pol : rep.policies) {
        j["policies"].push_back({{"name", pol.name},
                                 {"savings_kg", pol.savings_kg},
                                 {"savings_pct", pol.savings_pct},
                                 {"violations", pol.violations},
                                 {"adjustments", pol.adjustments},
                                 {"relaxed_slots", pol.relaxed_slots}});
    }
    auto out = open_report(path);
    out << j.dump(2) << '\n';
}

int run_with_report(const RunConfig& cfg, eass::AnnualReport& rep) {
    const eass::Dataset data = dataset_or_die(cfg);
    try {
        rep = eass::run_horizon(cfg.sim_params(), data);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return std::string(e.what()).find("warmup") != std::string::npos ? kExitWarmup
                                                                         : kExitError;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emission-aware storage scheduling experiments"};
    app.require_subcommand(1);

    std::string config_path = "config.json";
    std::string out_path;
    std::string axis = "battery_hours";
    std::vector<double> values;

    auto* init = app.add_subcommand("init", "write a default configuration file");
    init->add_option("-o,--out", out_path, "output path (default config.json)");

    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic dataset");
    synth->add_option("-c,--config", config_path, "configuration file");
    synth->add_option("-o,--out", out_path, "dataset directory (default from config paths)");

    auto* run = app.add_subcommand("run", "run every policy over the horizon");
    run->add_option("-c,--config", config_path, "configuration file");

    auto* sweep_cmd = app.add_subcommand("sweep", "re-run the horizon along one axis");
    sweep_cmd->add_option("-c,--config", config_path, "configuration file");
    sweep_cmd->add_option("-a,--axis", axis, "battery_hours | rate_hours | penetration | gamma");
    sweep_cmd->add_option("-v,--values", values, "axis values")->required();

    auto* feval = app.add_subcommand("forecast-eval", "per-transformer forecast accuracy");
    feval->add_option("-c,--config", config_path, "configuration file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (init->parsed()) {
            const std::string path = out_path.empty() ? "config.json" : out_path;
            eass::save_config(RunConfig{}, path);
            std::printf("wrote %s\n", path.c_str());
            return kExitOk;
        }

        const RunConfig cfg = load_or_die(config_path);
        std::filesystem::create_directories(cfg.output_dir);

        if (synth->parsed()) {
            const eass::Dataset data = eass::generate_synthetic(cfg.synth_spec());
            const std::string dir =
                out_path.empty() ? std::filesystem::path(cfg.loads_path).parent_path().string()
                                 : out_path;
            for (const auto& p : eass::write_dataset(data, dir.empty() ? "." : dir))
                std::printf("wrote %s\n", p.c_str());
            return kExitOk;
        }

        if (run->parsed()) {
            eass::AnnualReport rep;
            if (int rc = run_with_report(cfg, rep); rc != kExitOk) return rc;
            const std::filesystem::path dir = cfg.output_dir;
            write_report_csv(dir / "report.csv", rep);
            write_summary_json(dir / "summary.json", cfg, rep);
            long violations = 0;
            for (const auto& pol : rep.policies) violations += pol.violations;
            for (const auto& pol : rep.policies)
                std::printf("%s: %.1f kg saved (%.3f%%), %ld violations\n", pol.name.c_str(),
                            pol.savings_kg, pol.savings_pct, pol.violations);
            if (violations > 0) {
                std::fprintf(stderr, "error: %ld realized constraint violations\n", violations);
                return kExitViolations;
            }
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            const eass::Dataset data = dataset_or_die(cfg);
            std::vector<eass::SweepRow> rows;
            try {
                rows = eass::sweep(cfg.sim_params(), data, axis, values);
            } catch (const ConfigError& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return std::string(e.what()).find("axis") != std::string::npos ? kExitBadConfig
                                                                               : kExitError;
            }
            const std::filesystem::path path =
                std::filesystem::path(cfg.output_dir) / ("sweep_" + axis + ".csv");
            auto out = open_report(path);
            out << "axis,value,policy,savings_pct\n";
            char buf[64];
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%g,%s,%.6f", r.value, r.policy.c_str(),
                              r.savings_pct);
                out << r.axis << ',' << buf << '\n';
            }
            std::printf("wrote %s\n", path.string().c_str());
            return kExitOk;
        }

        if (feval->parsed()) {
            const eass::Dataset data = dataset_or_die(cfg);
            eass::SimParams params = cfg.sim_params();
            params.penetration = 0.0; // forecasting only; skip the schedulers
            params.policies = {eass::parse_policy("OnlineLP")};
            eass::AnnualReport rep;
            try {
                rep = eass::run_horizon(params, data);
            } catch (const ConfigError& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return std::string(e.what()).find("warmup") != std::string::npos ? kExitWarmup
                                                                                 : kExitError;
            }
            const std::filesystem::path path =
                std::filesystem::path(cfg.output_dir) / "forecast_mape.csv";
            auto out = open_report(path);
            out << "transformer_id,mape_pct\n";
            char buf[64];
            for (std::size_t i = 0; i < rep.mape_by_transformer.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%.6f", rep.mape_by_transformer[i]);
                out << data.transformers[i].id << ',' << buf << '\n';
            }
            std::printf("wrote %s (mean %.2f%%, persistence %.2f%%)\n", path.string().c_str(),
                        rep.mape_model_pct, rep.mape_persistence_pct);
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
