#include "eass/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace eass {

void LinearProgram::validate() const {
    if (int(objective.size()) != num_vars || int(lower.size()) != num_vars ||
        int(upper.size()) != num_vars)
        throw ConfigError("LinearProgram: array sizes do not match num_vars");
    for (double c : objective)
        if (!std::isfinite(c)) throw ConfigError("LinearProgram: non-finite objective coefficient");
    for (int j = 0; j < num_vars; ++j)
        if (lower[j] > upper[j]) throw ConfigError("LinearProgram: empty variable bound interval");
    for (const auto& row : rows) {
        for (auto [j, a] : row.coeffs) {
            if (j < 0 || j >= num_vars) throw ConfigError("LinearProgram: coefficient index out of range");
            if (!std::isfinite(a)) throw ConfigError("LinearProgram: non-finite row coefficient");
        }
        if (row.sense == RowSense::Range && row.rhs_low > row.rhs)
            throw ConfigError("LinearProgram: empty range row");
    }
}

namespace {

enum class VarState : unsigned char { Basic, AtLower, AtUpper, FreeZero };

class BoundedSimplex {
public:
    BoundedSimplex(const LinearProgram& lp, const std::vector<double>* hint)
        : lp_(lp), hint_(hint) {
        m_ = int(lp.rows.size());
        nv_ = lp.num_vars;
        ncols_ = nv_ + m_; // artificials appended on demand
        lo_.assign(std::size_t(ncols_), 0.0);
        up_.assign(std::size_t(ncols_), 0.0);
        for (int j = 0; j < nv_; ++j) {
            lo_[std::size_t(j)] = lp.lower[std::size_t(j)];
            up_[std::size_t(j)] = lp.upper[std::size_t(j)];
        }
        rhs_ref_.resize(std::size_t(m_));
        for (int r = 0; r < m_; ++r) {
            const LpRow& row = lp.rows[std::size_t(r)];
            const int s = nv_ + r;
            switch (row.sense) {
                case RowSense::LE:
                    rhs_ref_[std::size_t(r)] = row.rhs;
                    lo_[std::size_t(s)] = 0.0;
                    up_[std::size_t(s)] = kInf;
                    break;
                case RowSense::GE:
                    rhs_ref_[std::size_t(r)] = row.rhs;
                    lo_[std::size_t(s)] = -kInf;
                    up_[std::size_t(s)] = 0.0;
                    break;
                case RowSense::EQ:
                    rhs_ref_[std::size_t(r)] = row.rhs;
                    lo_[std::size_t(s)] = 0.0;
                    up_[std::size_t(s)] = 0.0;
                    break;
                case RowSense::Range:
                    rhs_ref_[std::size_t(r)] = row.rhs;
                    lo_[std::size_t(s)] = 0.0;
                    up_[std::size_t(s)] = row.rhs - row.rhs_low;
                    break;
            }
        }
    }

    Solution run() {
        place_nonbasic();
        build_tableau();
        if (need_phase1_) {
            Solution s = iterate(phase1_cost_);
            if (s.status != SolveStatus::Optimal) return s;
            double infeas = 0.0;
            std::string bad;
            for (int a = 0; a < int(art_rows_.size()); ++a) {
                const int col = ncols_ - int(art_rows_.size()) + a;
                const double v = std::abs(value_of(col));
                if (v > 1e-7) {
                    infeas += v;
                    if (!bad.empty()) bad += ", ";
                    bad += lp_.rows[std::size_t(art_rows_[std::size_t(a)])].name;
                }
            }
            if (infeas > 1e-7) {
                Solution out;
                out.status = SolveStatus::Infeasible;
                out.iterations = iterations_;
                out.message = "infeasible; total residual " + std::to_string(infeas) +
                              " on rows: " + bad;
                return out;
            }
            // pin artificials at zero for phase 2
            for (int a = 0; a < int(art_rows_.size()); ++a) {
                const int col = ncols_ - int(art_rows_.size()) + a;
                lo_[std::size_t(col)] = 0.0;
                up_[std::size_t(col)] = 0.0;
                if (state_[std::size_t(col)] != VarState::Basic) {
                    state_[std::size_t(col)] = VarState::AtLower;
                    xval_[std::size_t(col)] = 0.0;
                }
            }
        }
        std::vector<double> cost(std::size_t(ncols_), 0.0);
        for (int j = 0; j < nv_; ++j) cost[std::size_t(j)] = lp_.objective[std::size_t(j)];
        Solution s = iterate(cost);
        if (s.status != SolveStatus::Optimal) return s;
        return extract();
    }

private:
    double value_of(int col) const {
        if (state_[std::size_t(col)] == VarState::Basic) {
            for (int r = 0; r < m_; ++r)
                if (basis_[std::size_t(r)] == col) return bval_[std::size_t(r)];
        }
        return xval_[std::size_t(col)];
    }

    void place_nonbasic() {
        state_.assign(std::size_t(ncols_), VarState::AtLower);
        xval_.assign(std::size_t(ncols_), 0.0);
        for (int j = 0; j < nv_; ++j) {
            const double lo = lo_[std::size_t(j)], up = up_[std::size_t(j)];
            if (std::isinf(lo) && std::isinf(up)) {
                state_[std::size_t(j)] = VarState::FreeZero;
                xval_[std::size_t(j)] = 0.0;
            } else if (std::isinf(lo)) {
                state_[std::size_t(j)] = VarState::AtUpper;
                xval_[std::size_t(j)] = up;
            } else if (std::isinf(up)) {
                state_[std::size_t(j)] = VarState::AtLower;
                xval_[std::size_t(j)] = lo;
            } else if (lo <= 0.0 && 0.0 <= up) {
                // start at the bound nearest the hint value (default zero)
                const double ref = hint_ ? (*hint_)[std::size_t(j)] : 0.0;
                if (ref - lo <= up - ref) {
                    state_[std::size_t(j)] = VarState::AtLower;
                    xval_[std::size_t(j)] = lo;
                } else {
                    state_[std::size_t(j)] = VarState::AtUpper;
                    xval_[std::size_t(j)] = up;
                }
            } else if (hint_ && (*hint_)[std::size_t(j)] - lo > up - (*hint_)[std::size_t(j)]) {
                state_[std::size_t(j)] = VarState::AtUpper;
                xval_[std::size_t(j)] = up;
            } else if (lo > 0.0) {
                state_[std::size_t(j)] = VarState::AtLower;
                xval_[std::size_t(j)] = lo;
            } else {
                state_[std::size_t(j)] = VarState::AtUpper;
                xval_[std::size_t(j)] = up;
            }
        }
    }

    void build_tableau() {
        basis_.resize(std::size_t(m_));
        bval_.resize(std::size_t(m_));
        std::vector<double> slack_need(std::size_t(m_), 0.0);
        art_rows_.clear();
        for (int r = 0; r < m_; ++r) {
            double act = 0.0;
            for (auto [j, a] : lp_.rows[std::size_t(r)].coeffs)
                act += a * xval_[std::size_t(j)];
            slack_need[std::size_t(r)] = rhs_ref_[std::size_t(r)] - act;
        }
        // detect rows whose slack cannot absorb the initial activity
        for (int r = 0; r < m_; ++r) {
            const int s = nv_ + r;
            const double v = slack_need[std::size_t(r)];
            if (v < lo_[std::size_t(s)] - 1e-11 || v > up_[std::size_t(s)] + 1e-11)
                art_rows_.push_back(r);
        }
        need_phase1_ = !art_rows_.empty();
        const int n_art = int(art_rows_.size());
        ncols_ += n_art;
        lo_.resize(std::size_t(ncols_));
        up_.resize(std::size_t(ncols_));
        state_.resize(std::size_t(ncols_), VarState::AtLower);
        xval_.resize(std::size_t(ncols_), 0.0);
        phase1_cost_.assign(std::size_t(ncols_), 0.0);

        tab_.assign(std::size_t(m_) * std::size_t(ncols_), 0.0);
        for (int r = 0; r < m_; ++r) {
            double* row = &tab_[std::size_t(r) * std::size_t(ncols_)];
            for (auto [j, a] : lp_.rows[std::size_t(r)].coeffs) row[j] += a;
            row[nv_ + r] = 1.0;
        }

        int next_art = ncols_ - n_art;
        std::vector<bool> is_art_row(std::size_t(m_), false);
        for (int r : art_rows_) is_art_row[std::size_t(r)] = true;

        for (int r = 0; r < m_; ++r) {
            const int s = nv_ + r;
            const double v = slack_need[std::size_t(r)];
            if (!is_art_row[std::size_t(r)]) {
                basis_[std::size_t(r)] = s;
                bval_[std::size_t(r)] = v;
                state_[std::size_t(s)] = VarState::Basic;
            } else {
                // slack parked at the bound nearest its required value; an
                // artificial carries the residual so the basis stays identity
                const double clamped = std::clamp(v, lo_[std::size_t(s)], up_[std::size_t(s)]);
                state_[std::size_t(s)] =
                    (clamped == lo_[std::size_t(s)]) ? VarState::AtLower : VarState::AtUpper;
                xval_[std::size_t(s)] = clamped;
                const double resid = v - clamped;
                const int col = next_art++;
                tab_[std::size_t(r) * std::size_t(ncols_) + std::size_t(col)] = 1.0;
                if (resid >= 0.0) {
                    lo_[std::size_t(col)] = 0.0;
                    up_[std::size_t(col)] = kInf;
                    phase1_cost_[std::size_t(col)] = 1.0;
                } else {
                    lo_[std::size_t(col)] = -kInf;
                    up_[std::size_t(col)] = 0.0;
                    phase1_cost_[std::size_t(col)] = -1.0;
                }
                basis_[std::size_t(r)] = col;
                bval_[std::size_t(r)] = resid;
                state_[std::size_t(col)] = VarState::Basic;
            }
        }
    }

    Solution iterate(const std::vector<double>& cost) {
        Solution out;
        // reduced costs from scratch for this phase
        dj_.assign(std::size_t(ncols_), 0.0);
        for (int j = 0; j < ncols_; ++j) dj_[std::size_t(j)] = cost[std::size_t(j)];
        for (int r = 0; r < m_; ++r) {
            const double cb = cost[std::size_t(basis_[std::size_t(r)])];
            if (cb == 0.0) continue;
            const double* row = &tab_[std::size_t(r) * std::size_t(ncols_)];
            for (int j = 0; j < ncols_; ++j) dj_[std::size_t(j)] -= cb * row[j];
        }

        double cmax = 0.0;
        for (double c : cost) cmax = std::max(cmax, std::abs(c));
        const double dtol = 1e-9 * (1.0 + cmax);
        const long limit = 2000 + 200L * (m_ + ncols_);
        int degen_streak = 0;
        bool bland = false;

        for (;;) {
            if (iterations_ > limit) {
                out.status = SolveStatus::NumericalFailure;
                out.message = "iteration limit exceeded";
                out.iterations = iterations_;
                return out;
            }
            // --- pricing ---
            int q = -1, dir = 0;
            double best = dtol;
            for (int j = 0; j < ncols_; ++j) {
                const VarState st = state_[std::size_t(j)];
                if (st == VarState::Basic) continue;
                if (lo_[std::size_t(j)] == up_[std::size_t(j)]) continue; // fixed
                const double d = dj_[std::size_t(j)];
                double score = 0.0;
                int cand_dir = 0;
                if (st == VarState::AtLower && d < -dtol) {
                    score = -d;
                    cand_dir = +1;
                } else if (st == VarState::AtUpper && d > dtol) {
                    score = d;
                    cand_dir = -1;
                } else if (st == VarState::FreeZero && std::abs(d) > dtol) {
                    score = std::abs(d);
                    cand_dir = d < 0 ? +1 : -1;
                } else {
                    continue;
                }
                if (bland) {
                    q = j;
                    dir = cand_dir;
                    break;
                }
                if (score > best) {
                    best = score;
                    q = j;
                    dir = cand_dir;
                }
            }
            if (q < 0) {
                out.status = SolveStatus::Optimal;
                out.iterations = iterations_;
                return out;
            }
            ++iterations_;

            // --- ratio test ---
            double flip_limit = kInf;
            if (std::isfinite(lo_[std::size_t(q)]) && std::isfinite(up_[std::size_t(q)]))
                flip_limit = up_[std::size_t(q)] - lo_[std::size_t(q)];
            double best_ratio = kInf;
            int block = -1;
            for (int r = 0; r < m_; ++r) {
                const double d = tab_[std::size_t(r) * std::size_t(ncols_) + std::size_t(q)] * dir;
                const int bi = basis_[std::size_t(r)];
                double ratio;
                if (d > 1e-10) {
                    if (std::isinf(lo_[std::size_t(bi)])) continue;
                    ratio = (bval_[std::size_t(r)] - lo_[std::size_t(bi)]) / d;
                } else if (d < -1e-10) {
                    if (std::isinf(up_[std::size_t(bi)])) continue;
                    ratio = (up_[std::size_t(bi)] - bval_[std::size_t(r)]) / (-d);
                } else {
                    continue;
                }
                if (ratio < 0.0) ratio = 0.0;
                if (ratio < best_ratio - 1e-10 ||
                    (ratio < best_ratio + 1e-10 && (block < 0 || bi < basis_[std::size_t(block)]))) {
                    best_ratio = ratio;
                    block = r;
                }
            }

            const double step = std::min(flip_limit, best_ratio);
            if (std::isinf(step)) {
                out.status = SolveStatus::Unbounded;
                out.message = "objective unbounded along variable " + var_name(q);
                out.iterations = iterations_;
                return out;
            }
            if (step < 1e-10) {
                if (++degen_streak > 60) bland = true;
            } else {
                degen_streak = 0;
                bland = false;
            }

            // move basics
            if (step > 0.0) {
                for (int r = 0; r < m_; ++r)
                    bval_[std::size_t(r)] -=
                        tab_[std::size_t(r) * std::size_t(ncols_) + std::size_t(q)] * dir * step;
            }

            if (block >= 0 && best_ratio <= flip_limit + 1e-12) {
                // basis change
                const int leave = basis_[std::size_t(block)];
                const double d = tab_[std::size_t(block) * std::size_t(ncols_) + std::size_t(q)] * dir;
                if (d > 0.0) {
                    state_[std::size_t(leave)] = VarState::AtLower;
                    xval_[std::size_t(leave)] = lo_[std::size_t(leave)];
                } else {
                    state_[std::size_t(leave)] = VarState::AtUpper;
                    xval_[std::size_t(leave)] = up_[std::size_t(leave)];
                }
                const double enter_val = xval_[std::size_t(q)] + dir * step;
                state_[std::size_t(q)] = VarState::Basic;
                basis_[std::size_t(block)] = q;
                bval_[std::size_t(block)] = enter_val;

                double* prow = &tab_[std::size_t(block) * std::size_t(ncols_)];
                const double piv = prow[q];
                const double inv = 1.0 / piv;
                for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
                prow[q] = 1.0;
                for (int r = 0; r < m_; ++r) {
                    if (r == block) continue;
                    double* row = &tab_[std::size_t(r) * std::size_t(ncols_)];
                    const double f = row[q];
                    if (f == 0.0) continue;
                    for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
                    row[q] = 0.0;
                }
                const double dq = dj_[std::size_t(q)];
                if (dq != 0.0) {
                    for (int j = 0; j < ncols_; ++j) dj_[std::size_t(j)] -= dq * prow[j];
                }
                dj_[std::size_t(q)] = 0.0;
            } else {
                // bound flip
                if (dir > 0) {
                    state_[std::size_t(q)] = VarState::AtUpper;
                    xval_[std::size_t(q)] = up_[std::size_t(q)];
                } else {
                    state_[std::size_t(q)] = VarState::AtLower;
                    xval_[std::size_t(q)] = lo_[std::size_t(q)];
                }
            }
        }
    }

    std::string var_name(int col) const {
        if (col < nv_ && col < int(lp_.var_names.size())) return lp_.var_names[std::size_t(col)];
        if (col < nv_) return "x" + std::to_string(col);
        if (col < nv_ + m_) return "slack:" + lp_.rows[std::size_t(col - nv_)].name;
        return "artificial" + std::to_string(col - nv_ - m_);
    }

    // Re-derive basic values from a fresh factorization of the basis to shed
    // accumulated tableau round-off, then assemble the solution.
    Solution extract() {
        std::vector<double> val(std::size_t(ncols_), 0.0);
        for (int j = 0; j < ncols_; ++j)
            if (state_[std::size_t(j)] != VarState::Basic) val[std::size_t(j)] = xval_[std::size_t(j)];

        if (m_ > 0) {
            std::vector<double> B(std::size_t(m_) * std::size_t(m_), 0.0);
            std::vector<double> rhs(std::size_t(m_), 0.0);
            const int n_art = int(art_rows_.size());
            for (int r = 0; r < m_; ++r) {
                rhs[std::size_t(r)] = rhs_ref_[std::size_t(r)];
                const int s = nv_ + r;
                if (state_[std::size_t(s)] != VarState::Basic)
                    rhs[std::size_t(r)] -= val[std::size_t(s)];
                for (auto [j, a] : lp_.rows[std::size_t(r)].coeffs)
                    if (state_[std::size_t(j)] != VarState::Basic)
                        rhs[std::size_t(r)] -= a * val[std::size_t(j)];
            }
            // basis columns in the original constraint matrix
            for (int c = 0; c < m_; ++c) {
                const int col = basis_[std::size_t(c)];
                if (col < nv_) {
                    for (int r = 0; r < m_; ++r) {
                        double a = 0.0;
                        for (auto [j, v] : lp_.rows[std::size_t(r)].coeffs)
                            if (j == col) a += v;
                        B[std::size_t(r) * std::size_t(m_) + std::size_t(c)] = a;
                    }
                } else if (col < nv_ + m_) {
                    B[std::size_t(col - nv_) * std::size_t(m_) + std::size_t(c)] = 1.0;
                } else {
                    // artificial k sits on row art_rows_[k]
                    const int k = col - (ncols_ - n_art);
                    B[std::size_t(art_rows_[std::size_t(k)]) * std::size_t(m_) + std::size_t(c)] = 1.0;
                }
            }
            if (!lu_solve(B, rhs, m_)) {
                // keep the tableau values if the refactorization is unusable
                for (int r = 0; r < m_; ++r) rhs[std::size_t(r)] = bval_[std::size_t(r)];
            }
            for (int r = 0; r < m_; ++r) val[std::size_t(basis_[std::size_t(r)])] = rhs[std::size_t(r)];
        }

        Solution out;
        out.status = SolveStatus::Optimal;
        out.iterations = iterations_;
        out.x.assign(val.begin(), val.begin() + nv_);
        out.objective = 0.0;
        for (int j = 0; j < nv_; ++j) out.objective += lp_.objective[std::size_t(j)] * out.x[std::size_t(j)];
        return out;
    }

    static bool lu_solve(std::vector<double>& a, std::vector<double>& b, int n) {
        std::vector<int> perm(std::size_t(n), 0);
        for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(a[std::size_t(perm[std::size_t(k)]) * std::size_t(n) + std::size_t(k)]);
            for (int i = k + 1; i < n; ++i) {
                const double v = std::abs(a[std::size_t(perm[std::size_t(i)]) * std::size_t(n) + std::size_t(k)]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best < 1e-12) return false;
            std::swap(perm[std::size_t(k)], perm[std::size_t(p)]);
            const std::size_t rk = std::size_t(perm[std::size_t(k)]) * std::size_t(n);
            const double piv = a[rk + std::size_t(k)];
            for (int i = k + 1; i < n; ++i) {
                const std::size_t ri = std::size_t(perm[std::size_t(i)]) * std::size_t(n);
                const double f = a[ri + std::size_t(k)] / piv;
                if (f == 0.0) continue;
                a[ri + std::size_t(k)] = f;
                for (int j = k + 1; j < n; ++j) a[ri + std::size_t(j)] -= f * a[rk + std::size_t(j)];
                b[std::size_t(perm[std::size_t(i)])] -= f * b[std::size_t(perm[std::size_t(k)])];
            }
        }
        std::vector<double> x(std::size_t(n), 0.0);
        for (int i = n - 1; i >= 0; --i) {
            const std::size_t ri = std::size_t(perm[std::size_t(i)]) * std::size_t(n);
            double v = b[std::size_t(perm[std::size_t(i)])];
            for (int j = i + 1; j < n; ++j) v -= a[ri + std::size_t(j)] * x[std::size_t(j)];
            x[std::size_t(i)] = v / a[ri + std::size_t(i)];
        }
        b = std::move(x);
        return true;
    }

    const LinearProgram& lp_;
    const std::vector<double>* hint_ = nullptr;
    int m_ = 0, nv_ = 0, ncols_ = 0;
    bool need_phase1_ = false;
    std::vector<double> lo_, up_, rhs_ref_, tab_, bval_, xval_, dj_, phase1_cost_;
    std::vector<int> basis_, art_rows_;
    std::vector<VarState> state_;
    int iterations_ = 0;
};

double row_activity(const LpRow& row, const std::vector<double>& x) {
    double act = 0.0;
    for (auto [j, a] : row.coeffs) act += a * x[std::size_t(j)];
    return act;
}

double row_violation(const LpRow& row, double act) {
    switch (row.sense) {
        case RowSense::LE: return act - row.rhs;
        case RowSense::GE: return row.rhs - act;
        case RowSense::EQ: return std::abs(act - row.rhs);
        case RowSense::Range: return std::max(act - row.rhs, row.rhs_low - act);
    }
    return 0.0;
}

}  // namespace

Solution solve_lp(const LinearProgram& lp, const std::vector<double>* hint) {
    lp.validate();
    if (hint && int(hint->size()) != lp.num_vars)
        throw ConfigError("solve_lp: hint length mismatch");
    BoundedSimplex solver(lp, hint);
    return solver.run();
}

Solution solve_lp_rowgen(const LinearProgram& lp) {
    lp.validate();
    std::vector<char> active(lp.rows.size(), 0);
    std::size_t n_active = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (lp.rows[r].sense == RowSense::EQ) {
            active[r] = 1;
            ++n_active;
        }
    }

    LinearProgram sub;
    sub.num_vars = lp.num_vars;
    sub.objective = lp.objective;
    sub.lower = lp.lower;
    sub.upper = lp.upper;
    sub.var_names = lp.var_names;

    const std::size_t max_outer = lp.rows.size() + 2;
    std::vector<double> hint;
    for (std::size_t pass = 0; pass < max_outer; ++pass) {
        sub.rows.clear();
        for (std::size_t r = 0; r < lp.rows.size(); ++r)
            if (active[r]) sub.rows.push_back(lp.rows[r]);
        Solution sol = solve_lp(sub, hint.empty() ? nullptr : &hint);
#ifdef EASS_LP_TRACE
        std::fprintf(stderr, "pass %zu: active=%zu iters=%d obj=%.6f\n", pass, n_active,
                     sol.iterations, sol.objective);
#endif
        if (sol.status == SolveStatus::Unbounded && n_active < lp.rows.size())
            return solve_lp(lp); // relaxation unbounded; solve in full
        if (sol.status != SolveStatus::Optimal) return sol;

        std::vector<double> viol(lp.rows.size(), 0.0);
        bool any = false;
        for (std::size_t r = 0; r < lp.rows.size(); ++r) {
            if (active[r]) continue;
            const LpRow& row = lp.rows[r];
            const double act = row_activity(row, sol.x);
            const double v = row_violation(row, act);
            if (v > 1e-9 * (1.0 + std::abs(row.rhs))) {
                viol[r] = v;
                any = true;
            }
        }
        if (!any) return sol;
        hint = sol.x;
        // Violated rows tend to come in index-contiguous runs (cumulative-sum
        // families); only the extremum of each run can bind, so activate just
        // that row per run. Late passes fall back to activating everything.
        if (pass + 8 >= max_outer || pass > 50) {
            for (std::size_t r = 0; r < lp.rows.size(); ++r)
                if (viol[r] > 0.0 && !active[r]) {
                    active[r] = 1;
                    ++n_active;
                }
        } else {
            std::size_t r = 0;
            while (r < lp.rows.size()) {
                if (viol[r] <= 0.0) {
                    ++r;
                    continue;
                }
                std::size_t best = r;
                while (r < lp.rows.size() && viol[r] > 0.0) {
                    if (viol[r] > viol[best]) best = r;
                    ++r;
                }
                active[best] = 1;
                ++n_active;
            }
        }
    }
    return solve_lp(lp);
}

std::string dump_lp(const LinearProgram& lp) {
    lp.validate();
    auto vname = [&](int j) {
        if (j < int(lp.var_names.size())) return lp.var_names[std::size_t(j)];
        return "x" + std::to_string(j);
    };
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "minimize\n";
    for (int j = 0; j < lp.num_vars; ++j)
        os << "  " << num(lp.objective[std::size_t(j)]) << " " << vname(j) << "\n";
    os << "rows " << lp.rows.size() << "\n";
    for (const auto& row : lp.rows) {
        os << "  " << (row.name.empty() ? std::string("r") : row.name) << ":";
        for (auto [j, a] : row.coeffs) os << " " << num(a) << "*" << vname(j);
        switch (row.sense) {
            case RowSense::LE: os << " <= " << num(row.rhs); break;
            case RowSense::GE: os << " >= " << num(row.rhs); break;
            case RowSense::EQ: os << " == " << num(row.rhs); break;
            case RowSense::Range:
                os << " in [" << num(row.rhs_low) << ", " << num(row.rhs) << "]";
                break;
        }
        os << "\n";
    }
    os << "bounds\n";
    for (int j = 0; j < lp.num_vars; ++j)
        os << "  " << num(lp.lower[std::size_t(j)]) << " <= " << vname(j) << " <= "
           << num(lp.upper[std::size_t(j)]) << "\n";
    return os.str();
}

}  // namespace eass
