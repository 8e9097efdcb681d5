#include "eass/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eass/carbon.hpp"
#include "eass/rng.hpp"

namespace eass {

std::string policy_name(const Policy& p) {
    switch (p.kind) {
        case PolicyKind::OfflineOptimal: return "OfflineOptimal";
        case PolicyKind::OnlineLP: return "OnlineLP";
        case PolicyKind::PreDay: return "PreDay";
        case PolicyKind::RobustRO: return "RobustRO";
    }
    return "?";
}

Policy parse_policy(const std::string& name, double gamma) {
    if (name == "OfflineOptimal") return {PolicyKind::OfflineOptimal, gamma};
    if (name == "OnlineLP") return {PolicyKind::OnlineLP, gamma};
    if (name == "PreDay") return {PolicyKind::PreDay, gamma};
    if (name == "RobustRO") return {PolicyKind::RobustRO, gamma};
    throw ConfigError("unknown policy: " + name);
}

std::vector<Policy> default_policies(double gamma) {
    return {{PolicyKind::OfflineOptimal, gamma},
            {PolicyKind::OnlineLP, gamma},
            {PolicyKind::PreDay, gamma},
            {PolicyKind::RobustRO, gamma}};
}

Projection project_feasible(const std::vector<double>& planned_x_kwh,
                            const std::vector<double>& actual_load_kw, double start_soc_kwh,
                            const Transformer& transformer, const StorageUnit& storage,
                            double slot_hours) {
    if (planned_x_kwh.size() != actual_load_kw.size())
        throw ConfigError("project_feasible: length mismatch");
    const double rate_kwh = storage.rate_limit_kw * slot_hours;
    const double cap = storage.capacity_kwh;

    Projection out;
    out.x_kwh.resize(planned_x_kwh.size());
    out.soc_kwh.resize(planned_x_kwh.size() + 1);
    double s = std::min(std::max(start_soc_kwh, 0.0), cap);
    out.soc_kwh[0] = s;
    for (std::size_t t = 0; t < planned_x_kwh.size(); ++t) {
        const double load = actual_load_kw[t];
        const double lo = std::max({-rate_kwh, -s, -load * slot_hours});
        double hi = std::min({rate_kwh, cap - s,
                              (transformer.capacity_kw - transformer.overload_margin_kw - load) *
                                  slot_hours});
        if (hi < 0.0) hi = 0.0; // transformer already past its margin: no charging
        const double x = std::min(std::max(planned_x_kwh[t], lo), std::max(lo, hi));
        if (std::abs(x - planned_x_kwh[t]) > 1e-9) ++out.adjustments;
        s += x;
        out.x_kwh[t] = x;
        out.soc_kwh[t + 1] = s;
    }
    return out;
}

double daily_savings(const std::vector<double>& realized_x_kwh,
                     const std::vector<double>& cost_kg_per_mwh, double soc_start_kwh,
                     double soc_end_kwh) {
    if (realized_x_kwh.size() != cost_kg_per_mwh.size())
        throw ConfigError("daily_savings: length mismatch");
    if (cost_kg_per_mwh.empty()) return 0.0;
    double emitted = 0.0, mean_cost = 0.0;
    for (std::size_t t = 0; t < realized_x_kwh.size(); ++t) {
        emitted += cost_kg_per_mwh[t] * realized_x_kwh[t];
        mean_cost += cost_kg_per_mwh[t];
    }
    mean_cost /= double(cost_kg_per_mwh.size());
    // residual stored energy keeps its value at the day's mean cost, so the
    // whole expression is -sum (c(t) - mean) * x(t): draining the battery
    // earns nothing beyond the price spread
    return -emitted / 1000.0 + (soc_end_kwh - soc_start_kwh) * mean_cost / 1000.0;
}

DayResult run_day(const Policy& policy, const DayInputs& in, int day_index) {
    DayResult out;
    out.day = day_index;
    const std::size_t n = in.transformers.size();
    const std::size_t T = std::size_t(in.grid.total_slots());

    if (policy.kind == PolicyKind::PreDay && (in.prev_actual_kw.empty() || in.cost_prev.empty())) {
        out.skipped = true;
        out.note = "PreDay has no previous-day data on day " + std::to_string(day_index);
        return out;
    }

    EassInstance inst;
    inst.grid = in.grid;
    inst.transformers = in.transformers;
    inst.storage = in.storage;
    inst.boundary_soc_kwh = in.boundary_soc_kwh;
    inst.sigma_kw.assign(n, std::vector<double>(T, 0.0));
    inst.gamma = 0.0;
    switch (policy.kind) {
        case PolicyKind::OfflineOptimal:
            inst.load_kw = in.actual_kw;
            inst.cost_kg_per_mwh = in.cost_today;
            break;
        case PolicyKind::OnlineLP:
            inst.load_kw = in.forecast_kw;
            inst.cost_kg_per_mwh = in.cost_today;
            break;
        case PolicyKind::PreDay:
            inst.load_kw = in.prev_actual_kw;
            inst.cost_kg_per_mwh = in.cost_prev;
            break;
        case PolicyKind::RobustRO:
            inst.load_kw = in.forecast_kw;
            inst.cost_kg_per_mwh = in.cost_today;
            inst.sigma_kw = in.sigma_kw;
            inst.gamma = std::min(policy.gamma, double(T));
            break;
    }

    const EassSolution plan = solve_eass(inst, policy.kind == PolicyKind::RobustRO);
    if (plan.status != SolveStatus::Optimal)
        throw ConfigError("day " + std::to_string(day_index) + " " + policy_name(policy) +
                          ": planner failed: " + plan.message);
    out.planned_x_kwh = plan.x_kwh;
    out.relaxed_slots = int(plan.relaxed_slots.size());

    out.realized_x_kwh.resize(n);
    out.realized_soc_kwh.resize(n);
    const double h = in.grid.slot_hours();
    std::vector<double> agg(T, 0.0);
    double soc0 = 0.0, soc1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Projection pr = project_feasible(plan.x_kwh[i], in.actual_kw[i], in.soc_start_kwh[i],
                                         in.transformers[i], in.storage[i], h);
        out.adjustments += pr.adjustments;
        soc0 += pr.soc_kwh.front();
        soc1 += pr.soc_kwh.back();
        for (std::size_t t = 0; t < T; ++t) agg[t] += pr.x_kwh[t];

        Schedule sched{pr.x_kwh, pr.soc_kwh.front()};
        out.violations += int(validate_schedule(sched, in.actual_kw[i], in.transformers[i],
                                                in.storage[i], std::nullopt, h)
                                  .size());
        out.realized_x_kwh[i] = std::move(pr.x_kwh);
        out.realized_soc_kwh[i] = std::move(pr.soc_kwh);
    }
    out.savings_kg = daily_savings(agg, in.cost_today, soc0, soc1);
    double mean_cost = 0.0;
    for (double c : in.cost_today) mean_cost += c;
    mean_cost /= double(T);
    out.soc_correction_kg = (soc1 - soc0) * mean_cost / 1000.0;
    return out;
}

void SimParams::validate() const {
    lags.validate();
    if (policies.empty()) throw ConfigError("SimParams: no policies");
    if (battery_hours < 0) throw ConfigError("SimParams: battery_hours must be nonnegative");
    if (penetration < 0 || penetration > 1)
        throw ConfigError("SimParams: penetration outside [0,1]");
    if (eta_fraction <= 0 || eta_fraction > 0.1)
        throw ConfigError("SimParams: eta_fraction outside (0, 0.1]");
    if (gamma < 0) throw ConfigError("SimParams: gamma must be nonnegative");
    if (ridge < 0) throw ConfigError("SimParams: ridge must be nonnegative");
    if (training_days < 1 || refit_days < 1)
        throw ConfigError("SimParams: training/refit cadence must be positive");
    if (deviation_window_days < 7)
        throw ConfigError("SimParams: deviation window must span at least 7 days");
    if (sigma_multiplier < 0) throw ConfigError("SimParams: sigma multiplier must be nonnegative");
    if (warmup_days < training_days + 7)
        throw ConfigError("SimParams: warmup must cover training plus 7 validation days");
}

std::vector<double> build_cost_series(const Dataset& data) {
    data.validate();
    TimeGrid day_grid{data.grid.slots_per_day, data.grid.slot_minutes, 1};
    std::vector<double> cost;
    cost.reserve(std::size_t(data.grid.total_slots()));
    for (int d = 0; d < data.grid.horizon_days; ++d) {
        LmpSeries hourly;
        hourly.values.assign(data.lmp_hourly.begin() + d * 24, data.lmp_hourly.begin() + (d + 1) * 24);
        const auto& stats = data.fuel_stats.for_month(data.month_of_day[std::size_t(d)]);
        const MarginalFactorSeries mf_hourly = marginal_factors(hourly, stats);
        MarginalFactorSeries mf_slot;
        mf_slot.fuels = mf_hourly.fuels;
        for (const auto& w : mf_hourly.weights)
            mf_slot.weights.push_back(expand_to_slots(w, day_grid));
        const auto day_cost = emission_cost_series(mf_slot, data.fuels);
        cost.insert(cost.end(), day_cost.begin(), day_cost.end());
    }
    return cost;
}

namespace {

std::vector<int> select_storage_subset(int n, double penetration, std::uint64_t seed) {
    std::vector<int> idx(std::size_t(n), 0);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed, "penetration");
    for (int i = n - 1; i > 0; --i)
        std::swap(idx[std::size_t(i)], idx[rng.uniform_index(std::uint64_t(i) + 1)]);
    const int count = int(std::lround(penetration * n));
    idx.resize(std::size_t(count));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

AnnualReport run_horizon(const SimParams& params, const Dataset& data) {
    params.validate();
    data.validate();
    const int days = data.grid.horizon_days;
    const int T_d = data.grid.slots_per_day;
    const std::size_t n = data.transformers.size();
    const double h = data.grid.slot_hours();
    if (days < params.warmup_days + 1)
        throw ConfigError("run_horizon: horizon shorter than warmup (" +
                          std::to_string(params.warmup_days) + " + 1 days needed)");

    const std::vector<double> cost = build_cost_series(data);

    // transformers with the overload margin applied; storage sized from the peak
    std::vector<Transformer> transformers = data.transformers;
    for (auto& t : transformers) t.overload_margin_kw = params.eta_fraction * t.capacity_kw;
    const std::vector<int> subset = select_storage_subset(int(n), params.penetration, params.seed);
    std::vector<char> with_storage(n, 0);
    for (int i : subset) with_storage[std::size_t(i)] = 1;

    std::vector<StorageUnit> storage(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!with_storage[i]) continue;
        const double peak =
            *std::max_element(data.load_kw[i].begin(), data.load_kw[i].end());
        const double cap = params.battery_hours * peak;
        const double rate = params.rate_hours > 0 ? params.rate_hours * peak : cap;
        storage[i] = {cap, rate, cap / 2.0};
    }

    AnnualReport report;
    report.first_eval_day = params.warmup_days;
    report.eval_days = days - params.warmup_days;
    report.storage_subset = subset;

    // one forecasting lane shared by every policy
    std::vector<ForecastModel> models(n);
    std::vector<std::vector<std::vector<double>>> residual_ring(n); // per tx, trailing days
    ExogenousFeatures exog{data.temperature_c, data.day_of_week};
    std::vector<double> mape_sum(n, 0.0);
    std::vector<long> mape_days(n, 0);
    double persist_sum = 0.0;
    long persist_days = 0;

    struct Lane {
        Policy policy;
        std::vector<double> soc;
        PolicyReport report;
    };
    std::vector<Lane> lanes;
    for (const Policy& p : params.policies) {
        Lane lane;
        lane.policy = p;
        for (std::size_t i = 0; i < n; ++i) lane.soc.push_back(storage[i].capacity_kwh / 2.0);
        lane.report.name = policy_name(p);
        lanes.push_back(std::move(lane));
    }

    std::vector<std::vector<double>> forecast_day(n), sigma_day(n);
    for (int d = params.training_days; d < days; ++d) {
        if ((d - params.training_days) % params.refit_days == 0) {
            const std::size_t lo = std::size_t(d - params.training_days) * std::size_t(T_d);
            const std::size_t hi = std::size_t(d) * std::size_t(T_d);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<double> slice(data.load_kw[i].begin() + long(lo),
                                          data.load_kw[i].begin() + long(hi));
                ExogenousFeatures ex{{data.temperature_c.begin() + long(lo),
                                      data.temperature_c.begin() + long(hi)},
                                     {data.day_of_week.begin() + (d - params.training_days),
                                      data.day_of_week.begin() + d}};
                models[i] = fit(slice, ex, params.lags, params.ridge, T_d);
            }
        }

        const std::size_t s0 = std::size_t(d) * std::size_t(T_d);
        std::vector<double> day_temp(data.temperature_c.begin() + long(s0),
                                     data.temperature_c.begin() + long(s0) + T_d);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> history(data.load_kw[i].begin(),
                                        data.load_kw[i].begin() + long(s0));
            forecast_day[i] = predict_day(models[i], history, day_temp,
                                          data.day_of_week[std::size_t(d)], T_d);
            sigma_day[i] = residual_ring[i].size() >= 7
                               ? estimate_deviation(residual_ring[i], params.deviation_window_days,
                                                    params.sigma_multiplier)
                               : std::vector<double>(std::size_t(T_d), 0.0);
        }

        if (d >= params.warmup_days) {
            DayInputs in;
            in.grid = {T_d, data.grid.slot_minutes, 1};
            in.transformers = transformers;
            in.storage = storage;
            in.forecast_kw = forecast_day;
            in.sigma_kw = sigma_day;
            in.cost_today.assign(cost.begin() + long(s0), cost.begin() + long(s0) + T_d);
            in.cost_prev.assign(cost.begin() + long(s0) - T_d, cost.begin() + long(s0));
            for (std::size_t i = 0; i < n; ++i) {
                in.actual_kw.push_back({data.load_kw[i].begin() + long(s0),
                                        data.load_kw[i].begin() + long(s0) + T_d});
                in.prev_actual_kw.push_back({data.load_kw[i].begin() + long(s0) - T_d,
                                             data.load_kw[i].begin() + long(s0)});
                in.boundary_soc_kwh.push_back(storage[i].capacity_kwh / 2.0);
            }

            for (Lane& lane : lanes) {
                in.soc_start_kwh = lane.soc;
                DayResult r = run_day(lane.policy, in, d);
                if (!r.skipped) {
                    for (std::size_t i = 0; i < n; ++i)
                        lane.soc[i] = r.realized_soc_kwh[i].back();
                }
                lane.report.savings_kg += r.savings_kg;
                lane.report.violations += r.violations;
                lane.report.adjustments += r.adjustments;
                lane.report.relaxed_slots += r.relaxed_slots;
                lane.report.daily_savings_kg.push_back(r.savings_kg);
                lane.report.daily_violations.push_back(r.violations);
            }

            // storage-free grid emissions, for savings percentages
            double day_base = 0.0;
            for (int t = 0; t < T_d; ++t) {
                double total_kw = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    total_kw += data.load_kw[i][s0 + std::size_t(t)];
                day_base += cost[s0 + std::size_t(t)] * total_kw * h / 1000.0;
            }
            report.baseline_kg += day_base;
            report.daily_baseline_kg.push_back(day_base);

            for (std::size_t i = 0; i < n; ++i) {
                std::vector<double> actual(data.load_kw[i].begin() + long(s0),
                                           data.load_kw[i].begin() + long(s0) + T_d);
                const MapeResult m = mape(actual, forecast_day[i]);
                mape_sum[i] += m.percent;
                ++mape_days[i];
                std::vector<double> prev(data.load_kw[i].begin() + long(s0) - T_d,
                                         data.load_kw[i].begin() + long(s0));
                persist_sum += mape(actual, prev).percent;
                ++persist_days;
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> resid(std::size_t(T_d), 0.0);
            for (int t = 0; t < T_d; ++t)
                resid[std::size_t(t)] =
                    data.load_kw[i][s0 + std::size_t(t)] - forecast_day[i][std::size_t(t)];
            residual_ring[i].push_back(std::move(resid));
            if (int(residual_ring[i].size()) > params.deviation_window_days)
                residual_ring[i].erase(residual_ring[i].begin());
        }
    }

    double model_total = 0.0;
    long model_days = 0;
    for (std::size_t i = 0; i < n; ++i) {
        report.mape_by_transformer.push_back(mape_days[i] ? mape_sum[i] / double(mape_days[i])
                                                          : 0.0);
        model_total += mape_sum[i];
        model_days += mape_days[i];
    }
    report.mape_model_pct = model_days ? model_total / double(model_days) : 0.0;
    report.mape_persistence_pct = persist_days ? persist_sum / double(persist_days) : 0.0;

    for (Lane& lane : lanes) {
        lane.report.savings_pct =
            report.baseline_kg > 0 ? 100.0 * lane.report.savings_kg / report.baseline_kg : 0.0;
        report.policies.push_back(std::move(lane.report));
    }
    return report;
}

std::vector<SweepRow> sweep(const SimParams& params, const Dataset& data, const std::string& axis,
                            const std::vector<double>& values) {
    std::vector<SweepRow> rows;
    for (double v : values) {
        SimParams p = params;
        if (axis == "battery_hours") {
            p.battery_hours = v;
        } else if (axis == "rate_hours") {
            p.rate_hours = v;
        } else if (axis == "penetration") {
            p.penetration = v;
        } else if (axis == "gamma") {
            p.gamma = v;
            for (Policy& pol : p.policies)
                if (pol.kind == PolicyKind::RobustRO) pol.gamma = v;
        } else {
            throw ConfigError("sweep: unknown axis '" + axis + "'");
        }
        const AnnualReport report = run_horizon(p, data);
        for (const PolicyReport& pr : report.policies)
            rows.push_back({axis, v, pr.name, pr.savings_pct});
    }
    return rows;
}

}  // namespace eass
