#include "lfvop/core.hpp"

#include <string>
#include <utility>

#include "lfvop/errors.hpp"
#include "lfvop/simplex.hpp"

namespace lfvop {

bool PolyhedralSet::contains(const RationalVector& x) const {
    if (x.size() != dimension()) {
        throw DimensionMismatch("membership test: point has length " + std::to_string(x.size()) +
                                ", set has dimension " + std::to_string(dimension()));
    }
    for (std::size_t r = 0; r < C.rows(); ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < C.cols(); ++j) lhs += C(r, j) * x[j];
        if (lhs > d[r]) return false;
    }
    return true;
}

Problem make_problem(std::vector<LinearFractionalObjective> objectives, PolyhedralSet feasible_set) {
    if (objectives.empty()) {
        throw DimensionMismatch("problem requires at least one objective");
    }
    if (feasible_set.num_constraints() == 0) {
        throw DimensionMismatch("feasible set requires at least one constraint row");
    }
    if (feasible_set.d.size() != feasible_set.num_constraints()) {
        throw DimensionMismatch("constraint rhs has length " + std::to_string(feasible_set.d.size()) +
                                ", matrix has " + std::to_string(feasible_set.num_constraints()) + " rows");
    }
    const std::size_t n = feasible_set.dimension();
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        const auto& obj = objectives[i];
        if (obj.a.size() != n || obj.b.size() != n) {
            throw DimensionMismatch("objective " + std::to_string(i + 1) + " has dimension " +
                                    std::to_string(obj.a.size()) + "/" + std::to_string(obj.b.size()) +
                                    ", feasible set has dimension " + std::to_string(n));
        }
    }
    return Problem{std::move(objectives), std::move(feasible_set)};
}

void check_query(const Problem& problem, const Query& query) {
    if (query.x_bar.size() != problem.dimension()) {
        throw DimensionMismatch("candidate point has length " + std::to_string(query.x_bar.size()) +
                                ", problem has dimension " + std::to_string(problem.dimension()));
    }
    if (query.epsilon.size() != problem.num_objectives()) {
        throw DimensionMismatch("epsilon has length " + std::to_string(query.epsilon.size()) + ", problem has " +
                                std::to_string(problem.num_objectives()) + " objectives");
    }
    for (std::size_t i = 0; i < query.epsilon.size(); ++i) {
        if (query.epsilon[i] < 0) {
            throw NegativeEpsilon("epsilon component " + std::to_string(i + 1) + " is negative");
        }
    }
    if (!problem.feasible_set.contains(query.x_bar)) {
        throw InfeasibleCandidate("candidate point violates the feasible set constraints");
    }
}

namespace {

Rational denominator_value(const LinearFractionalObjective& obj, const RationalVector& x) {
    return dot(obj.b, x) + obj.beta;
}

}  // namespace

Rational evaluate(const LinearFractionalObjective& obj, const RationalVector& x) {
    const Rational den = denominator_value(obj, x);
    if (den == 0) {
        throw ZeroDenominator("objective denominator vanishes at the evaluation point");
    }
    return (dot(obj.a, x) + obj.alpha) / den;
}

RationalVector gradient(const LinearFractionalObjective& obj, const RationalVector& x) {
    const Rational den = denominator_value(obj, x);
    if (den == 0) {
        throw ZeroDenominator("objective denominator vanishes at the differentiation point");
    }
    const Rational num = dot(obj.a, x) + obj.alpha;
    const Rational den_sq = den * den;
    RationalVector g(obj.dimension());
    for (std::size_t j = 0; j < g.size(); ++j) {
        g[j] = (obj.a[j] * den - obj.b[j] * num) / den_sq;
    }
    return g;
}

Rational fractional_identity_residual(const LinearFractionalObjective& obj, const RationalVector& x,
                                      const RationalVector& y) {
    const Rational den_x = denominator_value(obj, x);
    const Rational den_y = denominator_value(obj, y);
    if (den_x == 0 || den_y == 0) {
        throw ZeroDenominator("objective denominator vanishes at an identity endpoint");
    }
    const Rational difference = evaluate(obj, y) - evaluate(obj, x);
    const RationalVector g = gradient(obj, x);
    const Rational directional = dot(g, subtract(y, x));
    return difference - (den_x / den_y) * directional;
}

RationalVector denominators_at(const Problem& problem, const RationalVector& x) {
    RationalVector values(problem.num_objectives());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = denominator_value(problem.objectives[i], x);
        if (values[i] <= 0) {
            throw DomainViolation("objective " + std::to_string(i + 1) +
                                  " has nonpositive denominator at the given point");
        }
    }
    return values;
}

void require_query(const Problem& problem, const Query& query) {
    try {
        check_query(problem, query);
    } catch (const InfeasibleCandidate&) {
        if (is_empty(problem.feasible_set)) {
            throw EmptyFeasibleSet("feasible set has no points");
        }
        throw;
    }
}

bool is_empty(const PolyhedralSet& set) {
    LinearProgram membership(set.dimension(), VarKind::Free);
    for (std::size_t r = 0; r < set.num_constraints(); ++r) {
        membership.add_row(set.C.row(r), RowKind::LessEqual, set.d[r]);
    }
    return feasible_point(membership).status == LPStatus::Infeasible;
}

ValidationReport validate_problem(const Problem& problem) {
    const std::size_t n = problem.dimension();
    const auto& K = problem.feasible_set;

    if (is_empty(K)) {
        return ValidationReport{ValidationStatus::EmptyFeasibleSet, std::nullopt, {}};
    }

    ValidationReport report;
    report.denominator_minima.reserve(problem.num_objectives());
    for (std::size_t i = 0; i < problem.num_objectives(); ++i) {
        const auto& obj = problem.objectives[i];
        LinearProgram lp(n, VarKind::Free);
        lp.objective = obj.b;
        for (std::size_t r = 0; r < K.num_constraints(); ++r) {
            lp.add_row(K.C.row(r), RowKind::LessEqual, K.d[r]);
        }
        const LPOutcome outcome = solve(lp);
        std::optional<Rational> minimum;
        if (outcome.status == LPStatus::Optimal) minimum = outcome.optimal_value + obj.beta;
        report.denominator_minima.push_back(minimum);
        const bool violated = !minimum.has_value() || *minimum <= 0;
        if (violated && report.status == ValidationStatus::Valid) {
            report.status = ValidationStatus::StandingConditionViolated;
            report.violating_objective = i;
        }
    }
    return report;
}

}  // namespace lfvop
