#include "eass/domain.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace eass {

void MarginalFactorSeries::validate() const {
    if (fuels.size() != weights.size())
        throw ConfigError("marginal factor series: fuel/weight arity mismatch");
    const std::size_t slots = slot_count();
    for (const auto& w : weights)
        if (w.size() != slots)
            throw ConfigError("marginal factor series: ragged weight arrays");
    for (std::size_t t = 0; t < slots; ++t) {
        double sum = 0.0;
        for (const auto& w : weights) {
            if (w[t] < 0.0) throw ConfigError("marginal factor weights must be nonnegative");
            sum += w[t];
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ConfigError("marginal factor weights must sum to 1 at every slot");
    }
}

std::vector<double> emission_cost_series(const MarginalFactorSeries& factors,
                                         const std::vector<FuelType>& fuels) {
    std::unordered_map<std::string, double> factor_by_name;
    for (const auto& f : fuels) factor_by_name[f.name] = f.emission_factor_kg_per_mwh;

    std::vector<double> cost(factors.slot_count(), 0.0);
    for (std::size_t f = 0; f < factors.fuels.size(); ++f) {
        auto it = factor_by_name.find(factors.fuels[f]);
        if (it == factor_by_name.end())
            throw ConfigError("no emission factor for fuel: " + factors.fuels[f]);
        const double w = it->second;
        const auto& lam = factors.weights[f];
        for (std::size_t t = 0; t < cost.size(); ++t) cost[t] += w * lam[t];
    }
    return cost;
}

double schedule_emission_delta(const std::vector<double>& x_kwh,
                               const std::vector<double>& cost_kg_per_mwh) {
    if (x_kwh.size() != cost_kg_per_mwh.size())
        throw ConfigError("schedule/cost length mismatch");
    double total = 0.0;
    for (std::size_t t = 0; t < x_kwh.size(); ++t) total += cost_kg_per_mwh[t] * x_kwh[t];
    return total / 1000.0; // kWh * kg/MWh -> kg
}

double schedule_emission_delta(const std::vector<std::vector<double>>& x_kwh_per_transformer,
                               const std::vector<double>& cost_kg_per_mwh) {
    std::vector<double> aggregate(cost_kg_per_mwh.size(), 0.0);
    for (const auto& xi : x_kwh_per_transformer) {
        if (xi.size() != aggregate.size()) throw ConfigError("schedule/cost length mismatch");
        for (std::size_t t = 0; t < xi.size(); ++t) aggregate[t] += xi[t];
    }
    return schedule_emission_delta(aggregate, cost_kg_per_mwh);
}

double size_storage(const LoadSeries& load, double hours) {
    if (load.values.empty()) throw ConfigError("size_storage: empty load series");
    if (hours < 0) throw ConfigError("size_storage: hours must be nonnegative");
    return hours * *std::max_element(load.values.begin(), load.values.end());
}

std::vector<Violation> validate_schedule(const Schedule& schedule,
                                         const std::vector<double>& actual_load_kw,
                                         const Transformer& transformer,
                                         const StorageUnit& storage,
                                         std::optional<double> boundary_soc_kwh,
                                         double slot_hours) {
    std::vector<Violation> out;
    if (schedule.x_kwh.size() != actual_load_kw.size())
        throw ConfigError("validate_schedule: schedule/load length mismatch");

    const double tol = kScheduleTolKwh;
    const double rate_kwh = storage.rate_limit_kw * slot_hours;
    auto add = [&out](ViolationKind kind, int slot, double amount, std::string msg) {
        out.push_back({kind, slot, amount, std::move(msg)});
    };

    double soc = schedule.start_soc_kwh;
    if (boundary_soc_kwh && std::abs(soc - *boundary_soc_kwh) > tol)
        add(ViolationKind::BoundarySoc, 0, std::abs(soc - *boundary_soc_kwh),
            "state of charge does not start at the boundary value");

    for (std::size_t t = 0; t < schedule.x_kwh.size(); ++t) {
        const double x = schedule.x_kwh[t];
        const double load_kwh = actual_load_kw[t] * slot_hours;
        const int slot = int(t);

        if (std::abs(x) > rate_kwh + tol)
            add(ViolationKind::RateLimit, slot, std::abs(x) - rate_kwh,
                "charge/discharge exceeds the rate limit");
        if (-x > load_kwh + tol)
            add(ViolationKind::DischargeExceedsLoad, slot, -x - load_kwh,
                "discharge exceeds the load observed at the transformer");
        const double margin_kwh =
            (transformer.capacity_kw - transformer.overload_margin_kw - actual_load_kw[t]) * slot_hours;
        if (x > margin_kwh + tol)
            add(ViolationKind::OverloadMargin, slot, x - margin_kwh,
                "charging into the transformer capacity margin");

        soc += x;
        if (soc < -tol)
            add(ViolationKind::SocBelowZero, slot, -soc, "state of charge below zero");
        if (soc > storage.capacity_kwh + tol)
            add(ViolationKind::SocAboveCapacity, slot, soc - storage.capacity_kwh,
                "state of charge above storage capacity");
    }

    if (boundary_soc_kwh && std::abs(soc - *boundary_soc_kwh) > tol)
        add(ViolationKind::BoundarySoc, int(schedule.x_kwh.size()),
            std::abs(soc - *boundary_soc_kwh),
            "state of charge does not end at the boundary value");
    return out;
}

std::size_t clamp_negative_loads(std::vector<double>& values) {
    std::size_t clamped = 0;
    for (double& v : values) {
        if (v < 0.0) {
            v = 0.0;
            ++clamped;
        }
    }
    return clamped;
}

}  // namespace eass
