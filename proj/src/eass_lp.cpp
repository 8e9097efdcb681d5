#include "eass/eass_lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eass {

void EassInstance::validate() const {
    grid.validate();
    if (grid.horizon_days != 1) throw ConfigError("EassInstance covers exactly one day");
    const std::size_t n = transformers.size();
    const std::size_t T = std::size_t(slots());
    if (storage.size() != n || load_kw.size() != n || sigma_kw.size() != n ||
        boundary_soc_kwh.size() != n)
        throw ConfigError("EassInstance: per-transformer array arity mismatch");
    if (cost_kg_per_mwh.size() != T) throw ConfigError("EassInstance: cost series length mismatch");
    if (gamma < 0.0 || gamma > double(T))
        throw ConfigError("EassInstance: gamma outside [0, T]");
    for (std::size_t i = 0; i < n; ++i) {
        transformers[i].validate();
        storage[i].validate();
        if (load_kw[i].size() != T || sigma_kw[i].size() != T)
            throw ConfigError("EassInstance: load/sigma length mismatch");
        for (double s : sigma_kw[i])
            if (s < 0) throw ConfigError("EassInstance: negative deviation");
        if (boundary_soc_kwh[i] < 0 || boundary_soc_kwh[i] > storage[i].capacity_kwh)
            throw ConfigError("EassInstance: boundary state of charge outside [0, B]");
    }
}

std::vector<double> inner_budget_allocation(const std::vector<double>& sigma, double gamma) {
    const std::size_t T = sigma.size();
    if (gamma < 0.0 || gamma > double(T))
        throw ConfigError("inner_budget_allocation: gamma outside [0, T]");
    std::vector<std::size_t> order(T);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sigma[a] != sigma[b]) return sigma[a] > sigma[b];
        return a < b;
    });
    std::vector<double> z(T, 0.0);
    const std::size_t whole = std::size_t(std::floor(gamma + 1e-12));
    const double frac = gamma - double(whole);
    for (std::size_t k = 0; k < whole && k < T; ++k) z[order[k]] = 1.0;
    if (whole < T && frac > 1e-12) z[order[whole]] = frac;
    return z;
}

namespace {

struct SlotBounds {
    double lo = 0.0;
    double hi = 0.0;
    bool relaxed = false; // worst-case headroom negative; charging disallowed
};

SlotBounds slot_bounds(const EassInstance& inst, int i, int t, double beta_kw) {
    const double h = inst.grid.slot_hours();
    const double rate_kwh = inst.storage[std::size_t(i)].rate_limit_kw * h;
    const double load = inst.load_kw[std::size_t(i)][std::size_t(t)];
    const Transformer& tr = inst.transformers[std::size_t(i)];

    SlotBounds b;
    const double discharge_cap = std::max(load - beta_kw, 0.0) * h;
    b.lo = std::max(-rate_kwh, -discharge_cap);
    const double headroom = (tr.capacity_kw - tr.overload_margin_kw - (load + beta_kw)) * h;
    if (headroom < 0.0) b.relaxed = true;
    b.hi = std::min(rate_kwh, std::max(headroom, 0.0));
    return b;
}

LinearProgram build_with_beta(const EassInstance& inst,
                              const std::vector<std::vector<double>>& beta_kw,
                              std::vector<std::pair<int, int>>* relaxed_slots) {
    const int n = inst.transformer_count();
    const int T = inst.slots();

    LinearProgram lp;
    lp.num_vars = n * T;
    lp.objective.resize(std::size_t(lp.num_vars));
    lp.lower.resize(std::size_t(lp.num_vars));
    lp.upper.resize(std::size_t(lp.num_vars));
    lp.var_names.resize(std::size_t(lp.num_vars));

    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < T; ++t) {
            const int j = i * T + t;
            lp.objective[std::size_t(j)] = inst.cost_kg_per_mwh[std::size_t(t)] / 1000.0;
            const SlotBounds b = slot_bounds(inst, i, t, beta_kw[std::size_t(i)][std::size_t(t)]);
            lp.lower[std::size_t(j)] = b.lo;
            lp.upper[std::size_t(j)] = b.hi;
            lp.var_names[std::size_t(j)] =
                "x[" + std::to_string(i) + "][" + std::to_string(t) + "]";
            if (b.relaxed && relaxed_slots) relaxed_slots->push_back({i, t});
        }
        // state of charge stays in [0, B]: cumulative sums bounded around b0
        const double b0 = inst.boundary_soc_kwh[std::size_t(i)];
        const double cap = inst.storage[std::size_t(i)].capacity_kwh;
        for (int t = 0; t < T - 1; ++t) {
            LpRow row;
            row.sense = RowSense::Range;
            row.rhs_low = -b0;
            row.rhs = cap - b0;
            row.name = "soc[" + std::to_string(i) + "][" + std::to_string(t) + "]";
            row.coeffs.reserve(std::size_t(t) + 1);
            for (int u = 0; u <= t; ++u) row.coeffs.push_back({i * T + u, 1.0});
            lp.rows.push_back(std::move(row));
        }
        LpRow terminal;
        terminal.sense = RowSense::EQ;
        terminal.rhs = 0.0;
        terminal.name = "neutral[" + std::to_string(i) + "]";
        terminal.coeffs.reserve(std::size_t(T));
        for (int t = 0; t < T; ++t) terminal.coeffs.push_back({i * T + t, 1.0});
        lp.rows.push_back(std::move(terminal));
    }
    return lp;
}

std::vector<std::vector<double>> beta_matrix(const EassInstance& inst, bool robust) {
    const std::size_t n = std::size_t(inst.transformer_count());
    const std::size_t T = std::size_t(inst.slots());
    std::vector<std::vector<double>> beta(n, std::vector<double>(T, 0.0));
    if (!robust) return beta;
    for (std::size_t i = 0; i < n; ++i) {
        const auto z = inner_budget_allocation(inst.sigma_kw[i], inst.gamma);
        for (std::size_t t = 0; t < T; ++t) beta[i][t] = inst.sigma_kw[i][t] * z[t];
    }
    return beta;
}

}  // namespace

LinearProgram build_eass(const EassInstance& instance) {
    instance.validate();
    const auto beta = beta_matrix(instance, false);
    return build_with_beta(instance, beta, nullptr);
}

LinearProgram build_eass_ro(const EassInstance& instance,
                            std::vector<std::pair<int, int>>* relaxed_slots) {
    instance.validate();
    const auto beta = beta_matrix(instance, true);
    return build_with_beta(instance, beta, relaxed_slots);
}

EassSolution solve_eass(const EassInstance& instance, bool robust) {
    instance.validate();
    const int n = instance.transformer_count();
    const int T = instance.slots();
    const auto beta = beta_matrix(instance, robust);

    EassSolution out;
    out.status = SolveStatus::Optimal;
    out.x_kwh.assign(std::size_t(n), std::vector<double>(std::size_t(T), 0.0));
    out.soc_kwh.assign(std::size_t(n), std::vector<double>(std::size_t(T) + 1, 0.0));

    for (int i = 0; i < n; ++i) {
        const double b0 = instance.boundary_soc_kwh[std::size_t(i)];
        auto& soc = out.soc_kwh[std::size_t(i)];
        soc.assign(std::size_t(T) + 1, b0);
        if (instance.storage[std::size_t(i)].capacity_kwh <= 0.0) continue; // no storage: x = 0

        EassInstance single;
        single.grid = instance.grid;
        single.transformers = {instance.transformers[std::size_t(i)]};
        single.storage = {instance.storage[std::size_t(i)]};
        single.load_kw = {instance.load_kw[std::size_t(i)]};
        single.sigma_kw = {instance.sigma_kw[std::size_t(i)]};
        single.cost_kg_per_mwh = instance.cost_kg_per_mwh;
        single.boundary_soc_kwh = {b0};
        single.gamma = instance.gamma;

        std::vector<std::pair<int, int>> relaxed;
        std::vector<std::vector<double>> bi = {beta[std::size_t(i)]};
        LinearProgram lp = build_with_beta(single, bi, &relaxed);
        for (auto& [ti, slot] : relaxed) out.relaxed_slots.push_back({i, slot});

        Solution sol = solve_lp_rowgen(lp);
        if (sol.status != SolveStatus::Optimal) {
            out.status = sol.status;
            out.message = "transformer " + instance.transformers[std::size_t(i)].id + ": " +
                          sol.message;
            return out;
        }
        out.objective_kg += sol.objective;
        for (int t = 0; t < T; ++t) {
            out.x_kwh[std::size_t(i)][std::size_t(t)] = sol.x[std::size_t(t)];
            soc[std::size_t(t) + 1] = soc[std::size_t(t)] + sol.x[std::size_t(t)];
        }
    }
    return out;
}

OracleResult brute_force_oracle(const EassInstance& instance, double grid_step, bool robust) {
    instance.validate();
    if (grid_step <= 0) throw ConfigError("brute_force_oracle: grid_step must be positive");
    const int n = instance.transformer_count();
    const int T = instance.slots();
    if (n * T > 8) throw ConfigError("brute_force_oracle: instance too large (n*T > 8)");

    const double h = instance.grid.slot_hours();
    const auto beta = beta_matrix(instance, robust);

    OracleResult best;
    std::vector<std::vector<double>> x(std::size_t(n), std::vector<double>(std::size_t(T), 0.0));

    // DFS over (transformer, slot) in order, tracking state of charge and the
    // running objective; constraints checked directly from the model equations.
    auto recurse = [&](auto&& self, int i, int t, double soc, double obj) -> void {
        if (i == n) {
            if (!best.feasible || obj < best.objective_kg - 1e-15) {
                best.feasible = true;
                best.objective_kg = obj;
                best.x_kwh = x;
            }
            return;
        }
        if (t == T) {
            if (std::abs(soc - instance.boundary_soc_kwh[std::size_t(i)]) > 1e-9) return;
            self(self, i + 1, 0,
                 i + 1 < n ? instance.boundary_soc_kwh[std::size_t(i + 1)] : 0.0, obj);
            return;
        }
        const StorageUnit& st = instance.storage[std::size_t(i)];
        const Transformer& tr = instance.transformers[std::size_t(i)];
        const double rate_kwh = st.rate_limit_kw * h;
        const double load = instance.load_kw[std::size_t(i)][std::size_t(t)];
        const double b = beta[std::size_t(i)][std::size_t(t)];
        const double discharge_cap = std::max(load - b, 0.0) * h;
        const double headroom = (tr.capacity_kw - tr.overload_margin_kw - (load + b)) * h;

        const long kmin = long(std::ceil(-rate_kwh / grid_step - 1e-9));
        const long kmax = long(std::floor(rate_kwh / grid_step + 1e-9));
        for (long k = kmin; k <= kmax; ++k) {
            const double xv = double(k) * grid_step;
            if (-xv > discharge_cap + 1e-12) continue;
            if (headroom >= 0.0 ? xv > headroom + 1e-12 : xv > 1e-12) continue;
            const double soc2 = soc + xv;
            if (soc2 < -1e-12 || soc2 > st.capacity_kwh + 1e-12) continue;
            x[std::size_t(i)][std::size_t(t)] = xv;
            self(self, i, t + 1, soc2,
                 obj + instance.cost_kg_per_mwh[std::size_t(t)] * xv / 1000.0);
        }
        x[std::size_t(i)][std::size_t(t)] = 0.0;
    };
    recurse(recurse, 0, 0, n > 0 ? instance.boundary_soc_kwh[0] : 0.0, 0.0);
    return best;
}

}  // namespace eass
