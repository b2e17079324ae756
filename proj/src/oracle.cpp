#include "lfvop/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lfvop/errors.hpp"
#include "lfvop/simplex.hpp"

namespace lfvop {
namespace {

/// Linearized dominance row for objective i against target c_i = f_i(x_bar) - eps_i:
/// on K (where b_i.y + beta_i > 0), f_i(y) < c_i  <=>  w.y < rhs with
/// w = a_i - c_i b_i and rhs = c_i beta_i - alpha_i.
struct DominanceRow {
    RationalVector w;
    Rational rhs;
};

std::vector<DominanceRow> dominance_rows(const Problem& problem, const Query& query) {
    require_query(problem, query);
    denominators_at(problem, query.x_bar);  // rejects candidates outside the positivity domain

    std::vector<DominanceRow> rows;
    rows.reserve(problem.num_objectives());
    for (std::size_t i = 0; i < problem.num_objectives(); ++i) {
        const auto& obj = problem.objectives[i];
        const Rational target = evaluate(obj, query.x_bar) - query.epsilon[i];
        DominanceRow row;
        row.w.resize(problem.dimension());
        for (std::size_t j = 0; j < row.w.size(); ++j) row.w[j] = obj.a[j] - target * obj.b[j];
        row.rhs = target * obj.beta - obj.alpha;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Slack-maximization LP over (y, t): minimize -t subject to
///   w_i . y + t <= rhs_i   for i in strict rows,
///   w_i . y     <= rhs_i   for the remaining rows,
///   C y <= d,  t <= 1.
/// The strict system has a solution on K iff the optimum t* is > 0.
LinearProgram slack_lp(const Problem& problem, const std::vector<DominanceRow>& rows,
                       const std::vector<bool>& strict) {
    const std::size_t n = problem.dimension();
    LinearProgram lp(n + 1, VarKind::Free);
    lp.objective[n] = -1;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        RationalVector coeffs = rows[i].w;
        coeffs.push_back(strict[i] ? Rational(1) : Rational(0));
        lp.add_row(std::move(coeffs), RowKind::LessEqual, rows[i].rhs);
    }
    const auto& K = problem.feasible_set;
    for (std::size_t r = 0; r < K.num_constraints(); ++r) {
        RationalVector coeffs = K.C.row(r);
        coeffs.push_back(0);
        lp.add_row(std::move(coeffs), RowKind::LessEqual, K.d[r]);
    }
    RationalVector cap(n + 1, Rational(0));
    cap[n] = 1;
    lp.add_row(std::move(cap), RowKind::LessEqual, 1);
    return lp;
}

RationalVector drop_slack(const RationalVector& point) {
    return RationalVector(point.begin(), point.end() - 1);
}

}  // namespace

std::optional<DominanceWitness> weak_dominates_check(const Problem& problem, const Query& query) {
    const std::vector<DominanceRow> rows = dominance_rows(problem, query);
    const std::vector<bool> strict(rows.size(), true);

    const LPOutcome outcome = solve(slack_lp(problem, rows, strict));
    if (outcome.status != LPStatus::Optimal) {
        // y = x_bar with t = -max_i s_i eps_i is feasible and t is capped at 1.
        throw std::logic_error("weak dominance slack LP must attain an optimum");
    }
    const Rational slack = -outcome.optimal_value;
    if (slack <= 0) return std::nullopt;
    return DominanceWitness{drop_slack(outcome.optimal_point), WitnessKind::StrictAll, 0};
}

std::optional<DominanceWitness> efficient_dominates_check(const Problem& problem, const Query& query) {
    const std::vector<DominanceRow> rows = dominance_rows(problem, query);

    for (std::size_t j = 0; j < rows.size(); ++j) {
        std::vector<bool> strict(rows.size(), false);
        strict[j] = true;
        const LPOutcome outcome = solve(slack_lp(problem, rows, strict));
        if (outcome.status == LPStatus::Infeasible) continue;  // the weak rows alone exclude index j
        if (outcome.status == LPStatus::Unbounded) {
            throw std::logic_error("efficient dominance slack LP is capped and cannot be unbounded");
        }
        const Rational slack = -outcome.optimal_value;
        if (slack > 0) {
            return DominanceWitness{drop_slack(outcome.optimal_point), WitnessKind::WeakWithStrictIndex, j};
        }
    }
    return std::nullopt;
}

bool witness_holds(const Problem& problem, const Query& query, const DominanceWitness& witness) {
    if (witness.y.size() != problem.dimension()) return false;
    if (!problem.feasible_set.contains(witness.y)) return false;
    if (witness.kind == WitnessKind::WeakWithStrictIndex && witness.strict_index >= problem.num_objectives()) {
        return false;
    }
    bool strict_at_index = false;
    for (std::size_t i = 0; i < problem.num_objectives(); ++i) {
        const auto& obj = problem.objectives[i];
        const Rational gap = evaluate(obj, query.x_bar) - query.epsilon[i] - evaluate(obj, witness.y);
        if (witness.kind == WitnessKind::StrictAll) {
            if (gap <= 0) return false;
        } else {
            if (gap < 0) return false;
            if (i == witness.strict_index && gap > 0) strict_at_index = true;
        }
    }
    return witness.kind == WitnessKind::StrictAll || strict_at_index;
}

ConeLemmaResult cone_lemma_check(const FinitePointSet& omega) {
    if (omega.points.empty()) {
        throw DimensionMismatch("cone check requires a nonempty point set");
    }
    const std::size_t m = omega.points.front().size();
    if (m == 0) {
        throw DimensionMismatch("cone check requires points of positive dimension");
    }
    for (const auto& point : omega.points) {
        if (point.size() != m) {
            throw DimensionMismatch("cone check requires points of equal dimension");
        }
    }

    ConeLemmaResult result;
    result.prop_i = true;
    for (const auto& point : omega.points) {
        bool all_negative = true;
        for (const Rational& coord : point) {
            if (coord >= 0) {
                all_negative = false;
                break;
            }
        }
        if (all_negative) {
            result.prop_i = false;
            break;
        }
    }

    // cone(Omega) meets -int R^m_+ iff some conic combination is <= -1
    // componentwise (positive rescaling), i.e. iff this LP is feasible.
    LinearProgram lp(omega.points.size(), VarKind::NonNegative);
    for (std::size_t c = 0; c < m; ++c) {
        RationalVector coeffs(omega.points.size());
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = omega.points[j][c];
        lp.add_row(std::move(coeffs), RowKind::LessEqual, -1);
    }
    result.prop_ii = feasible_point(lp).status == LPStatus::Infeasible;
    return result;
}

std::vector<RationalVector> grid_points(const GridSpec& grid) {
    std::vector<RationalVector> axis_values;
    axis_values.reserve(grid.axes.size());
    for (const GridAxis& axis : grid.axes) {
        RationalVector values;
        values.reserve(axis.count);
        if (axis.count == 1) {
            values.push_back(axis.lo);
        } else if (axis.count > 1) {
            const Rational step = (axis.hi - axis.lo) / Rational(axis.count - 1);
            for (std::size_t i = 0; i < axis.count; ++i) values.push_back(axis.lo + Rational(i) * step);
        }
        if (values.empty()) return {};
        axis_values.push_back(std::move(values));
    }

    std::vector<RationalVector> points;
    if (axis_values.empty()) return points;
    std::vector<std::size_t> index(axis_values.size(), 0);
    while (true) {
        RationalVector point(axis_values.size());
        for (std::size_t k = 0; k < axis_values.size(); ++k) point[k] = axis_values[k][index[k]];
        points.push_back(std::move(point));

        std::size_t k = axis_values.size();
        while (k > 0) {
            --k;
            if (++index[k] < axis_values[k].size()) break;
            index[k] = 0;
            if (k == 0) return points;
        }
    }
}

std::vector<SweepRow> sweep(const Problem& problem, const RationalVector& epsilon, const GridSpec& grid) {
    if (epsilon.size() != problem.num_objectives()) {
        throw DimensionMismatch("epsilon has length " + std::to_string(epsilon.size()) + ", problem has " +
                                std::to_string(problem.num_objectives()) + " objectives");
    }
    for (std::size_t i = 0; i < epsilon.size(); ++i) {
        if (epsilon[i] < 0) {
            throw NegativeEpsilon("epsilon component " + std::to_string(i + 1) + " is negative");
        }
    }
    if (grid.axes.size() != problem.dimension()) {
        throw DimensionMismatch("grid has " + std::to_string(grid.axes.size()) + " axes, problem has dimension " +
                                std::to_string(problem.dimension()));
    }

    std::vector<SweepRow> rows;
    for (RationalVector& point : grid_points(grid)) {
        SweepRow row;
        row.point = std::move(point);
        if (!problem.feasible_set.contains(row.point)) {
            row.status = SweepStatus::Skipped;
        } else {
            try {
                row.classification = classify(problem, Query{row.point, epsilon});
                row.status = SweepStatus::Classified;
            } catch (const Error& e) {
                row.status = SweepStatus::Error;
                row.error = e.code();
                row.classification.reset();
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lfvop
