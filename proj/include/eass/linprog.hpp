#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "eass/domain.hpp"

namespace eass {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { LE, GE, EQ, Range };

struct LpRow {
    std::vector<std::pair<int, double>> coeffs; // (variable index, coefficient)
    RowSense sense = RowSense::LE;
    double rhs = 0.0;     // LE/Range: upper activity bound; GE: lower; EQ: exact
    double rhs_low = 0.0; // Range only: lower activity bound
    std::string name;
};

// Minimization LP with box-bounded variables. Row activity a.x is constrained
// by sense/rhs; variable bounds may be +-infinity.
struct LinearProgram {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<std::string> var_names; // optional, used by the debug dump

    void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

struct Solution {
    SolveStatus status = SolveStatus::NumericalFailure;
    double objective = 0.0;
    std::vector<double> x;
    std::string message;
    int iterations = 0;
};

// Bounded-variable primal simplex. Deterministic: Dantzig pricing and a
// least-index tie break, with a Bland fallback after degenerate stalls.
// An optional hint (e.g. a previous solution) picks the starting bound for
// each nonbasic variable; it affects only the path taken, not the optimum.
Solution solve_lp(const LinearProgram& lp, const std::vector<double>* hint = nullptr);

// Solves via row generation: equality rows stay active, inequality rows are
// activated lazily when violated. Exact for the full LP; much faster when few
// rows bind at the optimum.
Solution solve_lp_rowgen(const LinearProgram& lp);

// Plain-text fixed-format listing (objective, rows, bounds) for external
// cross-checks.
std::string dump_lp(const LinearProgram& lp);

}  // namespace eass
