#pragma once

#include <cstddef>
#include <vector>

#include "lfvop/linalg.hpp"

namespace lfvop {

enum class RowKind { LessEqual, Equal, GreaterEqual };
enum class VarKind { Free, NonNegative };

/// minimize objective . z  subject to  constraint_matrix . z  (<=, =, >=)  constraint_rhs,
/// with each variable either free or restricted to be nonnegative.
struct LinearProgram {
    RationalVector objective;
    RationalMatrix constraint_matrix;
    RationalVector constraint_rhs;
    std::vector<RowKind> row_kinds;
    std::vector<VarKind> variable_bounds;

    LinearProgram() = default;
    LinearProgram(std::size_t num_vars, VarKind kind)
        : objective(num_vars, Rational(0)),
          constraint_matrix(0, num_vars),
          variable_bounds(num_vars, kind) {}

    std::size_t num_vars() const { return variable_bounds.size(); }
    std::size_t num_rows() const { return row_kinds.size(); }

    /// Appends one constraint row; coeffs length must match num_vars().
    void add_row(RationalVector coeffs, RowKind kind, Rational rhs);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    RationalVector optimal_point;  // nonempty iff Optimal
    Rational optimal_value = 0;    // meaningful iff Optimal
};

/// Two-phase primal simplex over exact rationals with Bland's pivoting rule.
/// Terminates on every well-formed input. Throws MalformedLP on dimension
/// inconsistencies.
LPOutcome solve(const LinearProgram& lp);

/// Phase 1 only: returns any exact feasible point (objective ignored,
/// optimal_value reports the objective at the returned point) or Infeasible.
LPOutcome feasible_point(const LinearProgram& lp);

}  // namespace lfvop
