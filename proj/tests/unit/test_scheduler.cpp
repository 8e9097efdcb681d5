#include "doctest.h"

#include <cmath>
#include <vector>

#include "eass/eass_lp.hpp"
#include "eass/rng.hpp"

using namespace eass;

namespace {

// single-transformer instance on a T-slot day; T must divide 1440
EassInstance make_instance(int T, double capacity_kw = 1000.0) {
    EassInstance inst;
    inst.grid = {T, 1440 / T, 1};
    inst.transformers = {{"tx", capacity_kw, 0.0}};
    inst.storage = {{2.0, 2.0, 0.0}};
    inst.load_kw = {std::vector<double>(std::size_t(T), 100.0)};
    inst.sigma_kw = {std::vector<double>(std::size_t(T), 0.0)};
    inst.cost_kg_per_mwh.assign(std::size_t(T), 400.0);
    inst.boundary_soc_kwh = {1.0};
    inst.gamma = 0.0;
    return inst;
}

// random tiny instance with every bound on the 0.125-kWh lattice, so the
// brute-force oracle at that step hits the LP vertex exactly
EassInstance random_lattice_instance(Rng& rng, int T) {
    const double u = 0.25;
    const double h = 1440.0 / T / 60.0;
    EassInstance inst;
    inst.grid = {T, 1440 / T, 1};
    const double cap_kwh = u * double(6 + rng.uniform_index(11)); // C*h in [1.5, 4]
    inst.transformers = {{"tx", cap_kwh / h, 0.0}};
    const double B = u * double(2 + rng.uniform_index(7));
    const double rate_kwh = u * double(2 + rng.uniform_index(3));
    inst.storage = {{B, rate_kwh / h, 0.0}};
    const double b0 = u * double(rng.uniform_index(std::uint64_t(B / u) + 1));
    inst.boundary_soc_kwh = {b0};
    inst.load_kw = {std::vector<double>(std::size_t(T), 0.0)};
    inst.sigma_kw = {std::vector<double>(std::size_t(T), 0.0)};
    for (int t = 0; t < T; ++t) {
        inst.load_kw[0][std::size_t(t)] = u * double(1 + rng.uniform_index(8)) / h;
        inst.sigma_kw[0][std::size_t(t)] = u * double(rng.uniform_index(4)) / h;
        inst.cost_kg_per_mwh.push_back(100.0 + 100.0 * double(rng.uniform_index(9)));
    }
    return inst;
}

bool same_rows(const LinearProgram& a, const LinearProgram& b) {
    if (a.num_vars != b.num_vars || a.rows.size() != b.rows.size()) return false;
    for (int j = 0; j < a.num_vars; ++j) {
        if (a.lower[std::size_t(j)] != b.lower[std::size_t(j)]) return false;
        if (a.upper[std::size_t(j)] != b.upper[std::size_t(j)]) return false;
        if (a.objective[std::size_t(j)] != b.objective[std::size_t(j)]) return false;
    }
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        const LpRow& ra = a.rows[r];
        const LpRow& rb = b.rows[r];
        if (ra.sense != rb.sense || ra.rhs != rb.rhs || ra.rhs_low != rb.rhs_low) return false;
        if (ra.coeffs != rb.coeffs) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("inner allocation: budget extremes") {
    const std::vector<double> sigma = {4.0, 1.0, 3.0, 2.0};
    for (double z : inner_budget_allocation(sigma, 0.0)) CHECK(z == 0.0);
    for (double z : inner_budget_allocation(sigma, 4.0)) CHECK(z == 1.0);
}

TEST_CASE("inner allocation: fractional budget splits at the sorted boundary") {
    const auto z = inner_budget_allocation({3.0, 1.0, 2.0}, 1.5);
    REQUIRE(z.size() == 3);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.5);
}

TEST_CASE("inner allocation: ties resolve toward the earlier slot") {
    const auto z = inner_budget_allocation({2.0, 2.0, 2.0}, 1.5);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 0.5);
    CHECK(z[2] == 0.0);
}

TEST_CASE("inner allocation: budget respected and out-of-range rejected") {
    Rng rng(29, "inner-budget");
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t T = 1 + rng.uniform_index(12);
        std::vector<double> sigma;
        for (std::size_t t = 0; t < T; ++t) sigma.push_back(rng.uniform(0.0, 10.0));
        const double gamma = rng.uniform(0.0, double(T));
        const auto z = inner_budget_allocation(sigma, gamma);
        double sum = 0.0;
        for (double v : z) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            sum += v;
        }
        CHECK(sum <= gamma + 1e-12);
    }
    CHECK_THROWS_AS((inner_budget_allocation({1.0, 2.0}, -0.1)), ConfigError);
    CHECK_THROWS_AS((inner_budget_allocation({1.0, 2.0}, 2.5)), ConfigError);
}

TEST_CASE("two-slot day: charge cheap, discharge expensive") {
    EassInstance inst = make_instance(2);
    inst.storage = {{2.0, 1.0 / inst.grid.slot_hours(), 0.0}};
    inst.cost_kg_per_mwh = {10.0, 5.0};
    const EassSolution sol = solve_eass(inst, false);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective_kg == doctest::Approx(-0.005).epsilon(1e-9));
    CHECK(sol.x_kwh[0][0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(sol.x_kwh[0][1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sol.soc_kwh[0].front() == 1.0);
    CHECK(sol.soc_kwh[0].back() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant emission cost leaves nothing to arbitrage") {
    const EassInstance inst = make_instance(48);
    const EassSolution sol = solve_eass(inst, false);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(std::abs(sol.objective_kg) <= 1e-9);
}

TEST_CASE("zero-capacity storage forces an idle schedule") {
    EassInstance inst = make_instance(48);
    inst.storage = {{0.0, 0.0, 0.0}};
    inst.boundary_soc_kwh = {0.0};
    for (int t = 0; t < 48; ++t)
        inst.cost_kg_per_mwh[std::size_t(t)] = 100.0 + 10.0 * t;
    const EassSolution sol = solve_eass(inst, false);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective_kg == 0.0);
    for (double x : sol.x_kwh[0]) CHECK(x == 0.0);
}

TEST_CASE("robust build with zero budget matches the nominal build row for row") {
    Rng rng(31, "gamma-zero");
    for (int rep = 0; rep < 10; ++rep) {
        EassInstance inst = random_lattice_instance(rng, 4);
        inst.gamma = 0.0;
        CHECK(same_rows(build_eass(inst), build_eass_ro(inst)));
    }
}

TEST_CASE("robust build with zero deviations matches the nominal build") {
    Rng rng(37, "sigma-zero");
    EassInstance inst = random_lattice_instance(rng, 4);
    inst.sigma_kw[0].assign(4, 0.0);
    inst.gamma = 3.0;
    CHECK(same_rows(build_eass(inst), build_eass_ro(inst)));
}

TEST_CASE("a deviation as large as the load shuts off discharging at that slot") {
    EassInstance inst = make_instance(48);
    inst.load_kw[0].assign(48, 10.0);
    inst.sigma_kw[0].assign(48, 0.0);
    inst.sigma_kw[0][7] = 10.0;
    inst.gamma = 1.0;
    const LinearProgram lp = build_eass_ro(inst);
    CHECK(lp.lower[7] == 0.0);
    const double h = inst.grid.slot_hours();
    const double rate_kwh = inst.storage[0].rate_limit_kw * h;
    for (int t = 0; t < 48; ++t)
        if (t != 7)
            CHECK(lp.lower[std::size_t(t)] == doctest::Approx(-std::min(rate_kwh, 10.0 * h)));
}

TEST_CASE("negative worst-case headroom relaxes the slot to no-charging") {
    EassInstance inst = make_instance(48, /*capacity_kw=*/12.0);
    inst.load_kw[0].assign(48, 10.0);
    inst.sigma_kw[0].assign(48, 3.0); // worst case 13 kW > 12 kW capacity
    inst.gamma = 48.0;
    std::vector<std::pair<int, int>> relaxed;
    const LinearProgram lp = build_eass_ro(inst, &relaxed);
    CHECK(relaxed.size() == 48);
    for (int t = 0; t < 48; ++t) CHECK(lp.upper[std::size_t(t)] == 0.0);
    const EassSolution sol = solve_eass(inst, true);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.relaxed_slots.size() == 48);
}

TEST_CASE("tiny instances: solver matches the exhaustive oracle") {
    Rng rng(101, "oracle");
    const double gammas[] = {0.0, 1.0, 2.5, 4.0};
    for (int rep = 0; rep < 12; ++rep) {
        EassInstance inst = random_lattice_instance(rng, 4);
        inst.gamma = gammas[rep % 4];
        for (bool robust : {false, true}) {
            const OracleResult oracle = brute_force_oracle(inst, 0.125, robust);
            const EassSolution sol = solve_eass(inst, robust);
            REQUIRE_MESSAGE(sol.status == SolveStatus::Optimal, sol.message);
            REQUIRE(oracle.feasible);
            CHECK(std::abs(sol.objective_kg - oracle.objective_kg) <= 1e-9);
        }
    }
}

TEST_CASE("oracle rejects oversized instances") {
    Rng rng(103, "oracle-size");
    EassInstance inst = random_lattice_instance(rng, 12);
    CHECK_THROWS_AS(brute_force_oracle(inst, 0.125), ConfigError);
}

TEST_CASE("robust objective is nondecreasing in the uncertainty budget") {
    Rng rng(107, "gamma-monotone");
    EassInstance inst = make_instance(48);
    for (int t = 0; t < 48; ++t) {
        inst.load_kw[0][std::size_t(t)] = rng.uniform(2.0, 12.0);
        inst.sigma_kw[0][std::size_t(t)] = rng.uniform(0.0, 3.0);
        inst.cost_kg_per_mwh[std::size_t(t)] = rng.uniform(100.0, 900.0);
    }
    inst.storage = {{4.0, 4.0, 0.0}};
    inst.boundary_soc_kwh = {2.0};
    double prev = -1e18;
    for (double gamma : {0.0, 5.0, 10.0, 20.0, 48.0}) {
        inst.gamma = gamma;
        const EassSolution sol = solve_eass(inst, true);
        REQUIRE(sol.status == SolveStatus::Optimal);
        CHECK(sol.objective_kg >= prev - 1e-9);
        prev = sol.objective_kg;
    }
}

TEST_CASE("per-transformer decomposition equals the joint program") {
    Rng rng(109, "decompose");
    EassInstance inst;
    inst.grid = {48, 30, 1};
    for (int i = 0; i < 3; ++i) {
        inst.transformers.push_back({"tx" + std::to_string(i), 200.0, 2.0});
        const double B = rng.uniform(1.0, 6.0);
        inst.storage.push_back({B, 2.0 * B, 0.0});
        inst.boundary_soc_kwh.push_back(B / 2.0);
        std::vector<double> load, sigma;
        for (int t = 0; t < 48; ++t) {
            load.push_back(rng.uniform(10.0, 80.0));
            sigma.push_back(0.0);
        }
        inst.load_kw.push_back(std::move(load));
        inst.sigma_kw.push_back(std::move(sigma));
    }
    for (int t = 0; t < 48; ++t) inst.cost_kg_per_mwh.push_back(rng.uniform(100.0, 900.0));

    const Solution joint = solve_lp(build_eass(inst));
    const EassSolution split = solve_eass(inst, false);
    REQUIRE(joint.status == SolveStatus::Optimal);
    REQUIRE(split.status == SolveStatus::Optimal);
    CHECK(split.objective_kg ==
          doctest::Approx(joint.objective).epsilon(1e-8).scale(std::abs(joint.objective) + 1.0));
}

TEST_CASE("solver output passes the schedule checker") {
    Rng rng(113, "schedule-check");
    EassInstance inst = make_instance(48);
    for (int t = 0; t < 48; ++t) {
        inst.load_kw[0][std::size_t(t)] = rng.uniform(2.0, 12.0);
        inst.sigma_kw[0][std::size_t(t)] = rng.uniform(0.0, 1.5);
        inst.cost_kg_per_mwh[std::size_t(t)] = rng.uniform(100.0, 900.0);
    }
    inst.gamma = 10.0;
    const double h = inst.grid.slot_hours();

    const EassSolution nominal = solve_eass(inst, false);
    REQUIRE(nominal.status == SolveStatus::Optimal);
    Schedule sched{nominal.x_kwh[0], inst.boundary_soc_kwh[0]};
    CHECK(validate_schedule(sched, inst.load_kw[0], inst.transformers[0], inst.storage[0],
                            inst.boundary_soc_kwh[0], h)
              .empty());

    // robust plans stay feasible at both worst-case load edges
    const EassSolution robust = solve_eass(inst, true);
    REQUIRE(robust.status == SolveStatus::Optimal);
    const auto z = inner_budget_allocation(inst.sigma_kw[0], inst.gamma);
    std::vector<double> low = inst.load_kw[0], high = inst.load_kw[0];
    for (int t = 0; t < 48; ++t) {
        const double beta = inst.sigma_kw[0][std::size_t(t)] * z[std::size_t(t)];
        low[std::size_t(t)] = std::max(low[std::size_t(t)] - beta, 0.0);
        high[std::size_t(t)] += beta;
    }
    Schedule rsched{robust.x_kwh[0], inst.boundary_soc_kwh[0]};
    CHECK(validate_schedule(rsched, low, inst.transformers[0], inst.storage[0],
                            inst.boundary_soc_kwh[0], h)
              .empty());
    CHECK(validate_schedule(rsched, high, inst.transformers[0], inst.storage[0],
                            inst.boundary_soc_kwh[0], h)
              .empty());
}

TEST_CASE("instance validation rejects inconsistent data") {
    EassInstance inst = make_instance(48);
    inst.gamma = 49.0;
    CHECK_THROWS_AS(inst.validate(), ConfigError);
    inst = make_instance(48);
    inst.sigma_kw[0][3] = -1.0;
    CHECK_THROWS_AS(inst.validate(), ConfigError);
    inst = make_instance(48);
    inst.boundary_soc_kwh = {5.0}; // above B = 2
    CHECK_THROWS_AS(inst.validate(), ConfigError);
}
