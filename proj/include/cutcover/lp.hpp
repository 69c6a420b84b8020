#pragma once

#include "cutcover/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cutcover {

enum class Sense { Minimize, Maximize };
enum class Rel { Le, Ge, Eq };

struct LpConstraint {
    std::vector<std::pair<int, Rational>> coeffs; // sparse (var index, coefficient)
    Rel rel = Rel::Le;
    Rational rhs;
};

struct LpProblem {
    Sense sense = Sense::Minimize;
    int num_vars = 0;
    std::vector<bool> nonneg;        // per variable; false = free
    std::vector<Rational> objective; // length num_vars
    std::vector<LpConstraint> constraints;

    static LpProblem make(Sense s, int nvars) {
        LpProblem p;
        p.sense = s;
        p.num_vars = nvars;
        p.nonneg.assign(nvars, true);
        p.objective.assign(nvars, Rational(0));
        return p;
    }
    void add_constraint(std::vector<std::pair<int, Rational>> coeffs, Rel rel, Rational rhs) {
        constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective_value;
    std::vector<Rational> primal; // per variable
    std::vector<Rational> dual;   // per constraint
};

// Exact feasibility / duality re-check by substitution (standard LP duality
// sign conventions). Returns false rather than throwing so it can also be
// used on externally supplied certificates.
inline bool check_lp_solution(const LpProblem& p, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return false;
    if (int(sol.primal.size()) != p.num_vars) return false;
    if (sol.dual.size() != p.constraints.size()) return false;
    bool maximize = p.sense == Sense::Maximize;
    // primal feasibility
    for (int j = 0; j < p.num_vars; ++j)
        if (p.nonneg[j] && sol.primal[j] < 0) return false;
    for (const auto& c : p.constraints) {
        Rational lhs = 0;
        for (auto [j, a] : c.coeffs) lhs += a * sol.primal[j];
        if (c.rel == Rel::Le && lhs > c.rhs) return false;
        if (c.rel == Rel::Ge && lhs < c.rhs) return false;
        if (c.rel == Rel::Eq && lhs != c.rhs) return false;
    }
    // dual sign conditions
    for (size_t i = 0; i < p.constraints.size(); ++i) {
        Rel r = p.constraints[i].rel;
        const Rational& y = sol.dual[i];
        if (r == Rel::Le && (maximize ? y < 0 : y > 0)) return false;
        if (r == Rel::Ge && (maximize ? y > 0 : y < 0)) return false;
    }
    // dual constraints: sum_i y_i a_ij vs c_j
    std::vector<Rational> yta(p.num_vars, Rational(0));
    for (size_t i = 0; i < p.constraints.size(); ++i)
        for (auto [j, a] : p.constraints[i].coeffs) yta[j] += sol.dual[i] * a;
    for (int j = 0; j < p.num_vars; ++j) {
        if (p.nonneg[j]) {
            if (maximize ? yta[j] < p.objective[j] : yta[j] > p.objective[j]) return false;
        } else if (yta[j] != p.objective[j]) {
            return false;
        }
    }
    // strong duality
    Rational cx = 0, yb = 0;
    for (int j = 0; j < p.num_vars; ++j) cx += p.objective[j] * sol.primal[j];
    for (size_t i = 0; i < p.constraints.size(); ++i) yb += sol.dual[i] * p.constraints[i].rhs;
    if (cx != sol.objective_value || yb != sol.objective_value) return false;
    return true;
}

// Dense-tableau exact rational simplex. Two-phase primal simplex with
// Bland's smallest-index rule; dual simplex steps for warm-started row
// generation. Everything is big-rational, so optimality is exact.
class SimplexSolver {
public:
    explicit SimplexSolver(const LpProblem& p) : prob_(p) {
        if (p.num_vars < 1) throw std::invalid_argument("lp: at least one variable");
        if (int(p.objective.size()) != p.num_vars || int(p.nonneg.size()) != p.num_vars)
            throw std::invalid_argument("lp: objective/nonneg size mismatch");
        for (const auto& c : p.constraints)
            for (auto [j, a] : c.coeffs) {
                (void)a;
                if (j < 0 || j >= p.num_vars) throw std::invalid_argument("lp: coefficient index out of range");
            }
        build();
    }

    LpStatus solve() {
        if (!phase1()) {
            status_ = LpStatus::Infeasible;
            return status_;
        }
        status_ = phase2();
        return status_;
    }

    // After an Optimal solve: append one <=-constraint (in user variable
    // space) and reoptimize with dual simplex pivots.
    LpStatus resolve_with_row(const LpConstraint& c) {
        if (c.rel != Rel::Le) throw std::invalid_argument("resolve_with_row: Le rows only");
        if (status_ != LpStatus::Optimal) throw std::logic_error("resolve_with_row: not at an optimum");
        append_le_row(c);
        status_ = dual_simplex();
        return status_;
    }

    LpSolution extract() const {
        LpSolution s;
        s.status = status_;
        if (status_ != LpStatus::Optimal) return s;
        bool maximize = prob_.sense == Sense::Maximize;
        // primal in user space
        std::vector<Rational> colval(ncols_, Rational(0));
        for (int i = 0; i < nrows_; ++i) colval[basis_[i]] = rhs_[i];
        s.primal.assign(prob_.num_vars, Rational(0));
        for (int j = 0; j < prob_.num_vars; ++j) {
            s.primal[j] = colval[var_col_[j]];
            if (neg_col_[j] >= 0) s.primal[j] -= colval[neg_col_[j]];
        }
        s.objective_value = -neg_obj_;
        if (maximize) s.objective_value = -s.objective_value;
        // duals from the identity column of each row
        s.dual.resize(row_identity_col_.size());
        for (size_t i = 0; i < row_identity_col_.size(); ++i) {
            Rational y = -cost_[row_identity_col_[i]];
            y *= row_mult_[i];
            if (maximize) y = -y;
            s.dual[i] = y;
        }
        return s;
    }

    int row_count() const { return nrows_; }
    LpStatus status() const { return status_; }

private:
    const LpProblem& prob_;
    // tableau: rows_ (nrows x ncols), rhs_, cost row (reduced costs), -objective
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    Rational neg_obj_;
    std::vector<int> basis_;
    int nrows_ = 0, ncols_ = 0;
    std::vector<int> var_col_;  // user var -> positive-part column
    std::vector<int> neg_col_;  // user var -> negative-part column or -1
    std::vector<int> row_identity_col_; // per row: its slack/artificial column
    std::vector<int> row_mult_;         // +1 / -1 applied during normalization
    std::vector<char> is_artificial_;   // per column
    LpStatus status_ = LpStatus::Infeasible;

    int new_col(bool artificial) {
        for (auto& r : rows_) r.emplace_back(0);
        cost_.emplace_back(0);
        is_artificial_.push_back(artificial ? 1 : 0);
        return ncols_++;
    }

    void build() {
        // structural columns (free variables split into x+ - x-)
        var_col_.resize(prob_.num_vars);
        neg_col_.assign(prob_.num_vars, -1);
        for (int j = 0; j < prob_.num_vars; ++j) {
            var_col_[j] = ncols_++;
            if (!prob_.nonneg[j]) neg_col_[j] = ncols_++;
        }
        is_artificial_.assign(ncols_, 0);
        cost_.assign(ncols_, Rational(0));
        nrows_ = int(prob_.constraints.size());
        rows_.assign(nrows_, std::vector<Rational>(ncols_, Rational(0)));
        rhs_.resize(nrows_);
        basis_.assign(nrows_, -1);
        row_identity_col_.resize(nrows_);
        row_mult_.resize(nrows_);
        for (int i = 0; i < nrows_; ++i) {
            const auto& c = prob_.constraints[i];
            Rel rel = c.rel;
            int mult = 1;
            if (c.rhs < 0) { // normalize rhs >= 0
                mult = -1;
                if (rel == Rel::Le) rel = Rel::Ge;
                else if (rel == Rel::Ge) rel = Rel::Le;
            }
            row_mult_[i] = mult;
            rhs_[i] = c.rhs * mult;
            for (auto [j, a] : c.coeffs) {
                Rational v = a * mult;
                rows_[i][var_col_[j]] += v;
                if (neg_col_[j] >= 0) rows_[i][neg_col_[j]] -= v;
            }
        }
        // slack / artificial columns, initial basis
        for (int i = 0; i < nrows_; ++i) {
            Rel rel = prob_.constraints[i].rel;
            if (row_mult_[i] == -1) rel = (rel == Rel::Le ? Rel::Ge : rel == Rel::Ge ? Rel::Le : Rel::Eq);
            if (rel == Rel::Le) {
                int s = new_col(false);
                rows_[i][s] = 1;
                basis_[i] = s;
                row_identity_col_[i] = s;
            } else if (rel == Rel::Ge) {
                int s = new_col(false);
                rows_[i][s] = -1;
                int a = new_col(true);
                rows_[i][a] = 1;
                basis_[i] = a;
                row_identity_col_[i] = a;
            } else {
                int a = new_col(true);
                rows_[i][a] = 1;
                basis_[i] = a;
                row_identity_col_[i] = a;
            }
        }
    }

    void pivot(int r, int j) {
        Rational piv = rows_[r][j];
        if (piv != 1) {
            for (auto& v : rows_[r])
                if (v != 0) v /= piv;
            rows_[r][j] = 1;
            rhs_[r] /= piv;
        }
        for (int i = 0; i < nrows_; ++i) {
            if (i == r) continue;
            Rational f = rows_[i][j];
            if (f == 0) continue;
            for (int k = 0; k < ncols_; ++k)
                if (rows_[r][k] != 0) rows_[i][k] -= f * rows_[r][k];
            rhs_[i] -= f * rhs_[r];
        }
        Rational f = cost_[j];
        if (f != 0) {
            for (int k = 0; k < ncols_; ++k)
                if (rows_[r][k] != 0) cost_[k] -= f * rows_[r][k];
            neg_obj_ -= f * rhs_[r];
        }
        basis_[r] = j;
    }

    // Bland primal simplex on the current cost row. Returns Optimal or Unbounded.
    LpStatus primal_simplex() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j)
                if (!is_artificial_[j] && cost_[j] < 0) { enter = j; break; }
            if (enter == -1) return LpStatus::Optimal;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < nrows_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == -1) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }

    // set cost row to (costs) reduced against the current basis
    void install_costs(const std::vector<Rational>& col_cost) {
        cost_ = col_cost;
        neg_obj_ = 0;
        for (int i = 0; i < nrows_; ++i) {
            const Rational& cb = col_cost[basis_[i]];
            if (cb == 0) continue;
            for (int k = 0; k < ncols_; ++k)
                if (rows_[i][k] != 0) cost_[k] -= cb * rows_[i][k];
            neg_obj_ -= cb * rhs_[i];
        }
    }

    bool phase1() {
        bool any_art = false;
        std::vector<Rational> c1(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j)
            if (is_artificial_[j]) { c1[j] = 1; any_art = true; }
        if (!any_art) {
            install_phase2_costs();
            return true;
        }
        // phase 1: artificials are allowed to enter (they start basic anyway)
        cost_ = c1;
        neg_obj_ = 0;
        for (int i = 0; i < nrows_; ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            for (int k = 0; k < ncols_; ++k)
                if (rows_[i][k] != 0) cost_[k] -= rows_[i][k];
            neg_obj_ -= rhs_[i];
        }
        // run Bland simplex over all columns for phase 1
        while (true) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j)
                if (cost_[j] < 0) { enter = j; break; }
            if (enter == -1) break;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < nrows_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == -1) throw std::logic_error("lp: phase 1 unbounded");
            pivot(leave, enter);
        }
        if (-neg_obj_ != 0) return false; // infeasible
        // drive artificials out of the basis where possible
        for (int i = 0; i < nrows_; ++i) {
            if (!is_artificial_[basis_[i]]) continue;
            for (int j = 0; j < ncols_; ++j) {
                if (is_artificial_[j] || rows_[i][j] == 0) continue;
                pivot(i, j);
                break;
            }
            // a fully zero row keeps its artificial basic at value 0
        }
        install_phase2_costs();
        return true;
    }

    void install_phase2_costs() {
        std::vector<Rational> c2(ncols_, Rational(0));
        bool maximize = prob_.sense == Sense::Maximize;
        for (int j = 0; j < prob_.num_vars; ++j) {
            Rational c = prob_.objective[j];
            if (maximize) c = -c;
            c2[var_col_[j]] = c;
            if (neg_col_[j] >= 0) c2[neg_col_[j]] = -c;
        }
        install_costs(c2);
    }

    LpStatus phase2() { return primal_simplex(); }

    void append_le_row(const LpConstraint& c) {
        std::vector<Rational> row(ncols_, Rational(0));
        for (auto [j, a] : c.coeffs) {
            row[var_col_[j]] += a;
            if (neg_col_[j] >= 0) row[neg_col_[j]] -= a;
        }
        Rational b = c.rhs;
        int s = new_col(false);
        row.emplace_back(0);
        row[s] = 1;
        // eliminate current basic columns from the new row
        for (int i = 0; i < nrows_; ++i) {
            Rational f = row[basis_[i]];
            if (f == 0) continue;
            for (int k = 0; k < ncols_; ++k)
                if (rows_[i][k] != 0) row[k] -= f * rows_[i][k];
            b -= f * rhs_[i];
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(b));
        basis_.push_back(s);
        row_identity_col_.push_back(s);
        row_mult_.push_back(1);
        ++nrows_;
    }

    // Dual simplex from a dual-feasible tableau (cost_ >= 0 on admissible
    // columns) with negative rhs entries. Bland-style tie breaking.
    LpStatus dual_simplex() {
        while (true) {
            int leave = -1;
            for (int i = 0; i < nrows_; ++i)
                if (rhs_[i] < 0 && (leave == -1 || basis_[i] < basis_[leave])) leave = i;
            if (leave == -1) return LpStatus::Optimal;
            int enter = -1;
            Rational best_ratio;
            for (int j = 0; j < ncols_; ++j) {
                if (is_artificial_[j] || rows_[leave][j] >= 0) continue;
                Rational ratio = cost_[j] / -rows_[leave][j];
                if (enter == -1 || ratio < best_ratio) {
                    enter = j;
                    best_ratio = ratio;
                }
            }
            if (enter == -1) return LpStatus::Infeasible;
            pivot(leave, enter);
        }
    }
};

// Solves an LP exactly; optimal solutions carry matching primal/dual
// certificates that are re-checked by substitution before returning.
inline LpSolution lp_solve(const LpProblem& p) {
    SimplexSolver s(p);
    s.solve();
    LpSolution sol = s.extract();
    if (sol.status == LpStatus::Optimal && !check_lp_solution(p, sol))
        throw std::logic_error("lp_solve: internal certificate check failed");
    return sol;
}

// Lazy row generation: repeatedly solves, asks the oracle for a violated
// <=-constraint at the current primal point, and reoptimizes with dual
// simplex until the oracle is satisfied. `generated` (optional) receives
// the appended constraints; the returned duals cover base constraints
// followed by generated ones, in order.
using SeparationOracle = std::function<std::optional<LpConstraint>(const std::vector<Rational>&)>;

inline LpSolution lp_solve_with_separation(const LpProblem& base, const SeparationOracle& oracle,
                                           std::vector<LpConstraint>* generated = nullptr) {
    LpProblem work = base;
    SimplexSolver s(work);
    s.solve();
    while (true) {
        LpSolution sol = s.extract();
        if (sol.status != LpStatus::Optimal) return sol;
        auto row = oracle(sol.primal);
        if (!row) {
            if (!check_lp_solution(work, sol))
                throw std::logic_error("lp_solve_with_separation: certificate check failed");
            return sol;
        }
        // oracle contract: the row must really be violated at the point
        Rational lhs = 0;
        for (auto [j, a] : row->coeffs) lhs += a * sol.primal[j];
        if (!(lhs > row->rhs))
            throw std::logic_error("lp_solve_with_separation: oracle returned a non-violated row");
        work.constraints.push_back(*row);
        if (generated) generated->push_back(*row);
        s.resolve_with_row(*row);
    }
}

} // namespace cutcover
