#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lfvop/linalg.hpp"

namespace lfvop {

/// One objective (a . x + alpha) / (b . x + beta).
struct LinearFractionalObjective {
    RationalVector a;
    Rational alpha;
    RationalVector b;
    Rational beta;

    std::size_t dimension() const { return a.size(); }
    bool is_linear() const { return is_zero(b) && beta == 1; }
};

/// Feasible set K = { x : C x <= d }, componentwise and exact.
struct PolyhedralSet {
    RationalMatrix C;  // p x n
    RationalVector d;  // length p

    std::size_t dimension() const { return C.cols(); }
    std::size_t num_constraints() const { return C.rows(); }
    bool contains(const RationalVector& x) const;
};

/// Minimize all objectives simultaneously over the feasible set, ordered by
/// the nonnegative orthant.
struct Problem {
    std::vector<LinearFractionalObjective> objectives;
    PolyhedralSet feasible_set;

    std::size_t num_objectives() const { return objectives.size(); }
    std::size_t dimension() const { return feasible_set.dimension(); }
};

/// Validating constructor. Throws DimensionMismatch unless every objective
/// shares the feasible set's dimension, and requires at least one objective
/// and one constraint row.
Problem make_problem(std::vector<LinearFractionalObjective> objectives, PolyhedralSet feasible_set);

/// A membership question: is x_bar efficient up to the componentwise
/// tolerance epsilon?
struct Query {
    RationalVector x_bar;
    RationalVector epsilon;
};

/// Throws DimensionMismatch, NegativeEpsilon, or InfeasibleCandidate when the
/// query violates its preconditions against the given problem.
void check_query(const Problem& problem, const Query& query);

/// Exact objective value. Throws ZeroDenominator when b . x + beta == 0.
Rational evaluate(const LinearFractionalObjective& obj, const RationalVector& x);

/// Exact gradient [a (b.x+beta) - b (a.x+alpha)] / (b.x+beta)^2.
RationalVector gradient(const LinearFractionalObjective& obj, const RationalVector& x);

/// [phi(y) - phi(x)] - (b.x+beta)/(b.y+beta) * <grad phi(x), y - x>.
/// Identically zero wherever both denominators are nonzero.
Rational fractional_identity_residual(const LinearFractionalObjective& obj, const RationalVector& x,
                                      const RationalVector& y);

/// Values of the objective denominators at x. Throws DomainViolation unless
/// all are strictly positive; downstream linearizations rely on that sign.
RationalVector denominators_at(const Problem& problem, const RationalVector& x);

enum class ValidationStatus { Valid, EmptyFeasibleSet, StandingConditionViolated };

struct ValidationReport {
    ValidationStatus status = ValidationStatus::Valid;
    /// First offending objective (0-based), set iff StandingConditionViolated.
    std::optional<std::size_t> violating_objective;
    /// Exact minimum of b_i . y + beta_i over K; nullopt when unbounded below.
    /// Empty when the feasible set itself is empty.
    std::vector<std::optional<Rational>> denominator_minima;

    bool valid() const { return status == ValidationStatus::Valid; }
};

/// Decides by LP whether K is nonempty and every objective denominator stays
/// strictly positive on all of K. Outcomes are report variants, not errors.
ValidationReport validate_problem(const Problem& problem);

/// LP feasibility test for C x <= d.
bool is_empty(const PolyhedralSet& set);

/// As check_query, but when membership fails because the feasible set itself
/// has no points, throws EmptyFeasibleSet instead of InfeasibleCandidate.
void require_query(const Problem& problem, const Query& query);

}  // namespace lfvop
