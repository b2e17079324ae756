#include "lfvop/simplex.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfvop/errors.hpp"

namespace lfvop {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_well_formed(const LinearProgram& lp) {
    const std::size_t n = lp.variable_bounds.size();
    const std::size_t m = lp.row_kinds.size();
    if (lp.objective.size() != n) {
        throw MalformedLP("objective length " + std::to_string(lp.objective.size()) +
                          " does not match " + std::to_string(n) + " variables");
    }
    if (lp.constraint_matrix.rows() != m || lp.constraint_rhs.size() != m) {
        throw MalformedLP("row count mismatch between matrix, rhs, and row kinds");
    }
    if (m > 0 && lp.constraint_matrix.cols() != n) {
        throw MalformedLP("constraint matrix has " + std::to_string(lp.constraint_matrix.cols()) +
                          " columns for " + std::to_string(n) + " variables");
    }
}

// Equality standard form  A x = rhs, x >= 0, rhs >= 0,  plus the mapping back
// to the caller's variables (free variables are split into differences of
// nonnegatives).
struct StandardForm {
    std::size_t num_cols = 0;
    std::vector<RationalVector> rows;  // each of length num_cols
    RationalVector rhs;
    RationalVector cost;
    std::vector<std::size_t> plus_col;   // per original variable
    std::vector<std::size_t> minus_col;  // kNone when the variable is nonnegative
};

StandardForm to_standard_form(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.num_rows();

    StandardForm sf;
    sf.plus_col.resize(n);
    sf.minus_col.assign(n, kNone);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        sf.plus_col[j] = cols++;
        if (lp.variable_bounds[j] == VarKind::Free) sf.minus_col[j] = cols++;
    }
    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t r = 0; r < m; ++r) {
        if (lp.row_kinds[r] != RowKind::Equal) slack_col[r] = cols++;
    }
    sf.num_cols = cols;

    sf.rows.assign(m, RationalVector(cols, Rational(0)));
    sf.rhs.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        RationalVector& row = sf.rows[r];
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& coeff = lp.constraint_matrix(r, j);
            if (coeff == 0) continue;
            row[sf.plus_col[j]] = coeff;
            if (sf.minus_col[j] != kNone) row[sf.minus_col[j]] = -coeff;
        }
        if (lp.row_kinds[r] == RowKind::LessEqual) row[slack_col[r]] = 1;
        if (lp.row_kinds[r] == RowKind::GreaterEqual) row[slack_col[r]] = -1;
        sf.rhs[r] = lp.constraint_rhs[r];
        if (sf.rhs[r] < 0) {
            for (Rational& v : row) v = -v;
            sf.rhs[r] = -sf.rhs[r];
        }
    }

    sf.cost.assign(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        sf.cost[sf.plus_col[j]] = lp.objective[j];
        if (sf.minus_col[j] != kNone) sf.cost[sf.minus_col[j]] = -lp.objective[j];
    }
    return sf;
}

// Dense tableau. Column layout: structural+slack columns first, then one
// artificial per row; the rhs is stored as a trailing entry of every row.
class Tableau {
public:
    explicit Tableau(const StandardForm& sf)
        : num_std_(sf.num_cols), num_rows_(sf.rows.size()), total_(sf.num_cols + sf.rows.size()) {
        rows_.assign(num_rows_, RationalVector(total_ + 1, Rational(0)));
        basis_.resize(num_rows_);
        for (std::size_t r = 0; r < num_rows_; ++r) {
            for (std::size_t j = 0; j < num_std_; ++j) rows_[r][j] = sf.rows[r][j];
            rows_[r][num_std_ + r] = 1;
            rows_[r][total_] = sf.rhs[r];
            basis_[r] = num_std_ + r;
        }
    }

    // Installs `cost` (padded with zeros over artificials) as the objective
    // row and prices the current basis out of it.
    void load_cost(const RationalVector& cost, bool artificial_phase) {
        cost_.assign(total_ + 1, Rational(0));
        if (artificial_phase) {
            for (std::size_t j = num_std_; j < total_; ++j) cost_[j] = 1;
        } else {
            for (std::size_t j = 0; j < cost.size(); ++j) cost_[j] = cost[j];
        }
        for (std::size_t r = 0; r < num_rows_; ++r) {
            const Rational factor = cost_[basis_[r]];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= total_; ++j) cost_[j] -= factor * rows_[r][j];
        }
    }

    // Bland's rule on columns [0, entering_limit). Returns false when the
    // objective is unbounded below.
    bool run(std::size_t entering_limit) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < entering_limit; ++j) {
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return true;

            std::size_t leave = kNone;
            Rational best_ratio;
            for (std::size_t r = 0; r < num_rows_; ++r) {
                const Rational& entry = rows_[r][enter];
                if (entry <= 0) continue;
                Rational ratio = rows_[r][total_] / entry;
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational piv = rows_[r][c];
        for (std::size_t j = 0; j <= total_; ++j) rows_[r][j] /= piv;
        for (std::size_t i = 0; i < num_rows_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational factor = rows_[i][c];
            for (std::size_t j = 0; j <= total_; ++j) rows_[i][j] -= factor * rows_[r][j];
        }
        if (cost_[c] != 0) {
            const Rational factor = cost_[c];
            for (std::size_t j = 0; j <= total_; ++j) cost_[j] -= factor * rows_[r][j];
        }
        basis_[r] = c;
    }

    // Pivots zero-level artificials out of the basis where a structural
    // column allows it. Rows with no structural entry are redundant and stay
    // inert: every later pivot column has a zero in them.
    void expel_artificials() {
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (basis_[r] < num_std_) continue;
            for (std::size_t j = 0; j < num_std_; ++j) {
                if (rows_[r][j] != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    Rational objective_value() const { return -cost_[total_]; }

    RationalVector standard_point() const {
        RationalVector x(num_std_, Rational(0));
        for (std::size_t r = 0; r < num_rows_; ++r) {
            if (basis_[r] < num_std_) x[basis_[r]] = rows_[r][total_];
        }
        return x;
    }

    std::size_t num_std() const { return num_std_; }

private:
    std::size_t num_std_;
    std::size_t num_rows_;
    std::size_t total_;
    std::vector<RationalVector> rows_;
    RationalVector cost_;
    std::vector<std::size_t> basis_;
};

RationalVector map_back(const LinearProgram& lp, const StandardForm& sf,
                        const RationalVector& x_std) {
    RationalVector z(lp.num_vars());
    for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = x_std[sf.plus_col[j]];
        if (sf.minus_col[j] != kNone) z[j] -= x_std[sf.minus_col[j]];
    }
    return z;
}

LPOutcome run_simplex(const LinearProgram& lp, bool phase_one_only) {
    check_well_formed(lp);
    const StandardForm sf = to_standard_form(lp);
    Tableau tableau(sf);

    tableau.load_cost({}, /*artificial_phase=*/true);
    if (!tableau.run(sf.num_cols + sf.rows.size())) {
        throw std::logic_error("phase-1 objective is bounded below by zero");
    }
    if (tableau.objective_value() != 0) {
        return LPOutcome{LPStatus::Infeasible, {}, Rational(0)};
    }
    tableau.expel_artificials();

    if (!phase_one_only) {
        tableau.load_cost(sf.cost, /*artificial_phase=*/false);
        if (!tableau.run(sf.num_cols)) {
            return LPOutcome{LPStatus::Unbounded, {}, Rational(0)};
        }
    }

    RationalVector point = map_back(lp, sf, tableau.standard_point());
    Rational value = dot(lp.objective, point);
    return LPOutcome{LPStatus::Optimal, std::move(point), std::move(value)};
}

}  // namespace

void LinearProgram::add_row(RationalVector coeffs, RowKind kind, Rational rhs) {
    if (coeffs.size() != num_vars()) {
        throw MalformedLP("row length " + std::to_string(coeffs.size()) + " does not match " +
                          std::to_string(num_vars()) + " variables");
    }
    constraint_matrix.append_row(coeffs);
    constraint_rhs.push_back(std::move(rhs));
    row_kinds.push_back(kind);
}

LPOutcome solve(const LinearProgram& lp) { return run_simplex(lp, false); }

LPOutcome feasible_point(const LinearProgram& lp) { return run_simplex(lp, true); }

}  // namespace lfvop
