#include "doctest.h"

#include <cmath>
#include <cstring>

#include "eass/linprog.hpp"
#include "eass/rng.hpp"

using namespace eass;

namespace {

double activity(const LpRow& row, const std::vector<double>& x) {
    double a = 0.0;
    for (auto [j, c] : row.coeffs) a += c * x[std::size_t(j)];
    return a;
}

bool rows_satisfied(const LinearProgram& lp, const std::vector<double>& x, double tol = 1e-6) {
    for (int j = 0; j < lp.num_vars; ++j) {
        if (x[std::size_t(j)] < lp.lower[std::size_t(j)] - tol) return false;
        if (x[std::size_t(j)] > lp.upper[std::size_t(j)] + tol) return false;
    }
    for (const auto& row : lp.rows) {
        const double a = activity(row, x);
        switch (row.sense) {
            case RowSense::LE:
                if (a > row.rhs + tol) return false;
                break;
            case RowSense::GE:
                if (a < row.rhs - tol) return false;
                break;
            case RowSense::EQ:
                if (std::abs(a - row.rhs) > tol) return false;
                break;
            case RowSense::Range:
                if (a > row.rhs + tol || a < row.rhs_low - tol) return false;
                break;
        }
    }
    return true;
}

// random LP with a known feasible point, so status must come back Optimal
LinearProgram random_feasible_lp(Rng& rng, std::vector<double>* x0_out = nullptr) {
    LinearProgram lp;
    lp.num_vars = 2 + int(rng.uniform_index(5));
    std::vector<double> x0;
    for (int j = 0; j < lp.num_vars; ++j) {
        lp.lower.push_back(-5.0);
        lp.upper.push_back(5.0);
        lp.objective.push_back(rng.uniform(-2.0, 2.0));
        x0.push_back(rng.uniform(-4.0, 4.0));
    }
    const int n_rows = 3 + int(rng.uniform_index(4));
    for (int r = 0; r < n_rows; ++r) {
        LpRow row;
        for (int j = 0; j < lp.num_vars; ++j)
            if (rng.uniform() < 0.7) row.coeffs.push_back({j, rng.uniform(-2.0, 2.0)});
        if (row.coeffs.empty()) row.coeffs.push_back({0, 1.0});
        const double act = activity(row, x0);
        switch (rng.uniform_index(4)) {
            case 0:
                row.sense = RowSense::LE;
                row.rhs = act + rng.uniform(0.0, 3.0);
                break;
            case 1:
                row.sense = RowSense::GE;
                row.rhs = act - rng.uniform(0.0, 3.0);
                break;
            case 2:
                row.sense = RowSense::Range;
                row.rhs_low = act - rng.uniform(0.0, 2.0);
                row.rhs = act + rng.uniform(0.0, 2.0);
                break;
            default:
                row.sense = RowSense::EQ;
                row.rhs = act;
                break;
        }
        lp.rows.push_back(std::move(row));
    }
    if (x0_out) *x0_out = std::move(x0);
    return lp;
}

}  // namespace

TEST_CASE("two-variable arbitrage toy solves to the corner") {
    // min (10 x0 + 5 x1)/1000, x in [-1,1]^2, x0 + x1 = 0, running sum in [-1,1]
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {10.0 / 1000.0, 5.0 / 1000.0};
    lp.lower = {-1.0, -1.0};
    lp.upper = {1.0, 1.0};
    LpRow soc;
    soc.sense = RowSense::Range;
    soc.rhs_low = -1.0;
    soc.rhs = 1.0;
    soc.coeffs = {{0, 1.0}};
    lp.rows.push_back(soc);
    LpRow neutral;
    neutral.sense = RowSense::EQ;
    neutral.rhs = 0.0;
    neutral.coeffs = {{0, 1.0}, {1, 1.0}};
    lp.rows.push_back(neutral);

    const Solution sol = solve_lp(lp);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-0.005).epsilon(1e-9));
    CHECK(sol.x[0] == doctest::Approx(-1.0));
    CHECK(sol.x[1] == doctest::Approx(1.0));
}

TEST_CASE("conflicting rows report infeasible") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {1.0};
    lp.lower = {-10.0};
    lp.upper = {10.0};
    LpRow ge;
    ge.sense = RowSense::GE;
    ge.rhs = 1.0;
    ge.coeffs = {{0, 1.0}};
    LpRow le;
    le.sense = RowSense::LE;
    le.rhs = 0.0;
    le.coeffs = {{0, 1.0}};
    lp.rows = {ge, le};
    CHECK(solve_lp(lp).status == SolveStatus::Infeasible);
}

TEST_CASE("unbounded direction is detected") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {1.0};
    lp.lower = {-kInf};
    lp.upper = {0.0};
    CHECK(solve_lp(lp).status == SolveStatus::Unbounded);
}

TEST_CASE("random feasible programs: optimal, feasible, no worse than the seed point") {
    Rng rng(41, "lp-random");
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<double> x0;
        const LinearProgram lp = random_feasible_lp(rng, &x0);
        const Solution sol = solve_lp(lp);
        REQUIRE_MESSAGE(sol.status == SolveStatus::Optimal, sol.message);
        CHECK(rows_satisfied(lp, sol.x));
        double obj0 = 0.0;
        for (int j = 0; j < lp.num_vars; ++j) obj0 += lp.objective[std::size_t(j)] * x0[std::size_t(j)];
        CHECK(sol.objective <= obj0 + 1e-7);
    }
}

TEST_CASE("row generation reproduces the full solve") {
    Rng rng(43, "lp-rowgen");
    for (int rep = 0; rep < 40; ++rep) {
        const LinearProgram lp = random_feasible_lp(rng);
        const Solution full = solve_lp(lp);
        const Solution lazy = solve_lp_rowgen(lp);
        REQUIRE(full.status == SolveStatus::Optimal);
        REQUIRE(lazy.status == SolveStatus::Optimal);
        CHECK(lazy.objective ==
              doctest::Approx(full.objective).epsilon(1e-8).scale(std::abs(full.objective) + 1.0));
        CHECK(rows_satisfied(lp, lazy.x));
    }
}

TEST_CASE("solver is deterministic") {
    Rng rng(47, "lp-determinism");
    const LinearProgram lp = random_feasible_lp(rng);
    const Solution a = solve_lp(lp);
    const Solution b = solve_lp(lp);
    REQUIRE(a.status == SolveStatus::Optimal);
    CHECK(std::memcmp(a.x.data(), b.x.data(), a.x.size() * sizeof(double)) == 0);
    CHECK(a.objective == b.objective);
}

TEST_CASE("a solution hint changes the path but not the optimum") {
    Rng rng(53, "lp-hint");
    for (int rep = 0; rep < 20; ++rep) {
        const LinearProgram lp = random_feasible_lp(rng);
        const Solution cold = solve_lp(lp);
        const Solution warm = solve_lp(lp, &cold.x);
        REQUIRE(warm.status == SolveStatus::Optimal);
        CHECK(warm.objective ==
              doctest::Approx(cold.objective).epsilon(1e-9).scale(std::abs(cold.objective) + 1.0));
    }
}

TEST_CASE("debug dump lists objective, rows and bounds") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {2.5};
    lp.lower = {0.0};
    lp.upper = {1.0};
    lp.var_names = {"x[0][0]"};
    LpRow row;
    row.sense = RowSense::LE;
    row.rhs = 0.5;
    row.coeffs = {{0, 1.0}};
    row.name = "cap";
    lp.rows.push_back(row);
    const std::string s = dump_lp(lp);
    CHECK(s.find("minimize") != std::string::npos);
    CHECK(s.find("x[0][0]") != std::string::npos);
    CHECK(s.find("cap") != std::string::npos);
    CHECK(s.find("bounds") != std::string::npos);
}

TEST_CASE("malformed programs fail validation") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1.0}; // wrong arity
    lp.lower = {0.0, 0.0};
    lp.upper = {1.0, 1.0};
    CHECK_THROWS_AS(lp.validate(), ConfigError);
}
