#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfvop/certify.hpp"
#include "lfvop/core.hpp"
#include "lfvop/dominance.hpp"

namespace lfvop {

/// Definition-level decider for weak epsilon-efficiency: searches K for y
/// with f(y) < f(x_bar) - epsilon componentwise by maximizing a shared slack.
/// Returns the dominating point, or nullopt when none exists.
std::optional<DominanceWitness> weak_dominates_check(const Problem& problem, const Query& query);

/// Definition-level decider for epsilon-efficiency: searches K for y with
/// f(y) <= f(x_bar) - epsilon componentwise and strict at some index. Scans
/// candidate strict indices in ascending order and returns the first hit.
std::optional<DominanceWitness> efficient_dominates_check(const Problem& problem, const Query& query);

/// Exact recheck of a claimed witness: y in K and the claimed inequalities
/// hold under evaluate.
bool witness_holds(const Problem& problem, const Query& query, const DominanceWitness& witness);

/// Finite Omega subset of R^m for the cone disjointness equivalence.
struct FinitePointSet {
    std::vector<RationalVector> points;
};

struct ConeLemmaResult {
    /// Omega itself misses -int R^m_+ (direct scan).
    bool prop_i = false;
    /// cone(Omega) misses -int R^m_+ (conic-combination LP).
    bool prop_ii = false;
};

/// Decides both disjointness properties independently; for finite Omega the
/// generated cone is closed, so the two answers must coincide.
ConeLemmaResult cone_lemma_check(const FinitePointSet& omega);

/// count evenly spaced values from lo to hi inclusive; count == 1 yields
/// {lo}, count == 0 an empty axis (hence an empty grid).
struct GridAxis {
    Rational lo;
    Rational hi;
    std::size_t count = 0;
};

struct GridSpec {
    std::vector<GridAxis> axes;  // one per coordinate
};

/// All grid points in row-major order (last axis varies fastest).
std::vector<RationalVector> grid_points(const GridSpec& grid);

enum class SweepStatus { Classified, Skipped, Error };

struct SweepRow {
    RationalVector point;
    SweepStatus status = SweepStatus::Skipped;
    /// Present iff status == Classified.
    std::optional<Classification> classification;
    /// Error code string, set iff status == Error.
    std::string error;
};

/// Classifies every feasible grid point with the fixed epsilon; infeasible
/// points are Skipped and per-point failures become Error rows rather than
/// aborting the sweep.
std::vector<SweepRow> sweep(const Problem& problem, const RationalVector& epsilon, const GridSpec& grid);

}  // namespace lfvop
