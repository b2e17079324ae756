#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lfvop/errors.hpp"
#include "lfvop/simplex.hpp"

using namespace lfvop;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num) / Rational(den); }

/// Exact constraint re-substitution for an Optimal outcome.
bool satisfies(const LinearProgram& lp, const RationalVector& z) {
    for (std::size_t r = 0; r < lp.num_rows(); ++r) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < lp.num_vars(); ++j) lhs += lp.constraint_matrix(r, j) * z[j];
        switch (lp.row_kinds[r]) {
            case RowKind::LessEqual:
                if (lhs > lp.constraint_rhs[r]) return false;
                break;
            case RowKind::Equal:
                if (lhs != lp.constraint_rhs[r]) return false;
                break;
            case RowKind::GreaterEqual:
                if (lhs < lp.constraint_rhs[r]) return false;
                break;
        }
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (lp.variable_bounds[j] == VarKind::NonNegative && z[j] < 0) return false;
    }
    return true;
}

/// Dual of min{c.z : G z >= h, z >= 0}: max{h.mu : G^T mu <= c, mu >= 0},
/// phrased as a minimization of -h.mu for the same solver.
LinearProgram dual_of_standard(const LinearProgram& primal) {
    const std::size_t rows = primal.num_rows();
    const std::size_t cols = primal.num_vars();
    LinearProgram dual(rows, VarKind::NonNegative);
    for (std::size_t r = 0; r < rows; ++r) dual.objective[r] = -primal.constraint_rhs[r];
    for (std::size_t j = 0; j < cols; ++j) {
        RationalVector row(rows);
        for (std::size_t r = 0; r < rows; ++r) row[r] = primal.constraint_matrix(r, j);
        dual.add_row(row, RowKind::LessEqual, primal.objective[j]);
    }
    return dual;
}

}  // namespace

TEST_CASE("one-dimensional optimal, unbounded, infeasible statuses") {
    SUBCASE("minimize -x with x <= 3, x >= 0 attains x = 3") {
        LinearProgram lp(1, VarKind::NonNegative);
        lp.objective = {rat(-1)};
        lp.add_row({rat(1)}, RowKind::LessEqual, rat(3));
        const LPOutcome out = solve(lp);
        REQUIRE(out.status == LPStatus::Optimal);
        CHECK(out.optimal_point == RationalVector{rat(3)});
        CHECK(out.optimal_value == rat(-3));
    }
    SUBCASE("minimize -x with x >= 0 only is unbounded") {
        LinearProgram lp(1, VarKind::NonNegative);
        lp.objective = {rat(-1)};
        lp.add_row({rat(1)}, RowKind::GreaterEqual, rat(0));
        CHECK(solve(lp).status == LPStatus::Unbounded);
    }
    SUBCASE("x <= -1 and x >= 0 is infeasible") {
        LinearProgram lp(1, VarKind::NonNegative);
        lp.objective = {rat(0)};
        lp.add_row({rat(1)}, RowKind::LessEqual, rat(-1));
        CHECK(solve(lp).status == LPStatus::Infeasible);
    }
}

TEST_CASE("feasible_point ignores the objective and handles empty systems") {
    SUBCASE("interval") {
        LinearProgram lp(1, VarKind::NonNegative);
        lp.objective = {rat(-1)};
        lp.add_row({rat(1)}, RowKind::LessEqual, rat(3));
        const LPOutcome out = feasible_point(lp);
        REQUIRE(out.status == LPStatus::Optimal);
        CHECK(out.optimal_point[0] >= 0);
        CHECK(out.optimal_point[0] <= 3);
    }
    SUBCASE("no constraints, one free variable") {
        LinearProgram lp(1, VarKind::Free);
        const LPOutcome out = feasible_point(lp);
        REQUIRE(out.status == LPStatus::Optimal);
        CHECK(out.optimal_point == RationalVector{rat(0)});
    }
    SUBCASE("contradictory bounds") {
        LinearProgram lp(1, VarKind::NonNegative);
        lp.add_row({rat(1)}, RowKind::LessEqual, rat(-1));
        CHECK(feasible_point(lp).status == LPStatus::Infeasible);
    }
}

TEST_CASE("free variables may go negative") {
    // minimize x subject to x >= -5 with x free
    LinearProgram lp(1, VarKind::Free);
    lp.objective = {rat(1)};
    lp.add_row({rat(1)}, RowKind::GreaterEqual, rat(-5));
    const LPOutcome out = solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.optimal_point == RationalVector{rat(-5)});
    CHECK(out.optimal_value == rat(-5));
}

TEST_CASE("exact fractional optimum on a 2-variable LP") {
    // minimize -x - y subject to 2x + y <= 3, x + 3y <= 4, x,y >= 0;
    // vertex at intersection: x = 1, y = 1, value -2.
    LinearProgram lp(2, VarKind::NonNegative);
    lp.objective = {rat(-1), rat(-1)};
    lp.add_row({rat(2), rat(1)}, RowKind::LessEqual, rat(3));
    lp.add_row({rat(1), rat(3)}, RowKind::LessEqual, rat(4));
    const LPOutcome out = solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.optimal_value == rat(-2));
    CHECK(out.optimal_point == RationalVector{rat(1), rat(1)});
}

TEST_CASE("Beale's cycling example terminates at the exact optimum") {
    // minimize -3/4 x1 + 150 x2 - 1/50 x3 + 6 x4
    // s.t. 1/4 x1 - 60 x2 - 1/25 x3 + 9 x4 <= 0
    //      1/2 x1 - 90 x2 - 1/50 x3 + 3 x4 <= 0
    //      x3 <= 1, x >= 0. Classic cycling instance for naive pivoting;
    // Bland's rule must terminate with value -1/20 at (1/25, 0, 1, 0).
    LinearProgram lp(4, VarKind::NonNegative);
    lp.objective = {rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
    lp.add_row({rat(1, 4), rat(-60), rat(-1, 25), rat(9)}, RowKind::LessEqual, rat(0));
    lp.add_row({rat(1, 2), rat(-90), rat(-1, 50), rat(3)}, RowKind::LessEqual, rat(0));
    lp.add_row({rat(0), rat(0), rat(1), rat(0)}, RowKind::LessEqual, rat(1));
    const LPOutcome out = solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.optimal_value == rat(-1, 20));
    CHECK(out.optimal_point == RationalVector{rat(1, 25), rat(0), rat(1), rat(0)});
}

TEST_CASE("degenerate equality system with redundant rows") {
    // x + y = 1 stated twice plus x - y = 0; unique solution (1/2, 1/2).
    LinearProgram lp(2, VarKind::NonNegative);
    lp.objective = {rat(1), rat(0)};
    lp.add_row({rat(1), rat(1)}, RowKind::Equal, rat(1));
    lp.add_row({rat(1), rat(1)}, RowKind::Equal, rat(1));
    lp.add_row({rat(1), rat(-1)}, RowKind::Equal, rat(0));
    const LPOutcome out = solve(lp);
    REQUIRE(out.status == LPStatus::Optimal);
    CHECK(out.optimal_point == RationalVector{rat(1, 2), rat(1, 2)});
}

TEST_CASE("malformed programs are rejected") {
    LinearProgram lp(2, VarKind::NonNegative);
    lp.objective = {rat(1)};  // wrong length
    lp.add_row({rat(1), rat(1)}, RowKind::LessEqual, rat(1));
    CHECK_THROWS_AS(solve(lp), MalformedLP);

    LinearProgram bad_row(2, VarKind::NonNegative);
    CHECK_THROWS_AS(bad_row.add_row({rat(1)}, RowKind::LessEqual, rat(0)), MalformedLP);

    LinearProgram inconsistent(1, VarKind::NonNegative);
    inconsistent.add_row({rat(1)}, RowKind::LessEqual, rat(0));
    inconsistent.row_kinds.pop_back();  // rhs and kinds now disagree
    CHECK_THROWS_AS(solve(inconsistent), MalformedLP);
}

TEST_CASE("strong duality holds exactly on random solvable instances") {
    // Random min{c.z : Gz >= h, z >= 0} with c >= 0 (bounded) and h <= 0
    // (z = 0 feasible): optimum exists, and the dual optimum matches exactly.
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 4);

    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t vars = dim(rng);
        const std::size_t rows = dim(rng);
        LinearProgram primal(vars, VarKind::NonNegative);
        for (std::size_t j = 0; j < vars; ++j) primal.objective[j] = rat(std::abs(num(rng)), den(rng));
        for (std::size_t r = 0; r < rows; ++r) {
            RationalVector row(vars);
            for (std::size_t j = 0; j < vars; ++j) row[j] = rat(num(rng), den(rng));
            primal.add_row(row, RowKind::GreaterEqual, rat(-std::abs(num(rng)), den(rng)));
        }
        const LPOutcome p = solve(primal);
        REQUIRE(p.status == LPStatus::Optimal);
        REQUIRE(satisfies(primal, p.optimal_point));

        const LPOutcome d = solve(dual_of_standard(primal));
        REQUIRE(d.status == LPStatus::Optimal);
        CHECK(p.optimal_value == -d.optimal_value);
        ++solved;
    }
    CHECK(solved == 60);
}

TEST_CASE("optimal outcomes re-substitute exactly with mixed row kinds") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> kind_pick(0, 2);
    std::uniform_int_distribution<int> bound_pick(0, 1);
    std::uniform_int_distribution<std::size_t> dim(1, 3);

    int optimal_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t vars = dim(rng);
        const std::size_t rows = dim(rng) + 1;
        LinearProgram lp(vars, VarKind::NonNegative);
        for (std::size_t j = 0; j < vars; ++j) {
            lp.objective[j] = rat(num(rng), den(rng));
            if (bound_pick(rng) == 0) lp.variable_bounds[j] = VarKind::Free;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            RationalVector row(vars);
            for (std::size_t j = 0; j < vars; ++j) row[j] = rat(num(rng), den(rng));
            const int pick = kind_pick(rng);
            const RowKind kind = pick == 0 ? RowKind::LessEqual : pick == 1 ? RowKind::Equal : RowKind::GreaterEqual;
            lp.add_row(row, kind, rat(num(rng), den(rng)));
        }
        const LPOutcome out = solve(lp);
        if (out.status == LPStatus::Optimal) {
            ++optimal_seen;
            CHECK(satisfies(lp, out.optimal_point));
            Rational value = 0;
            for (std::size_t j = 0; j < vars; ++j) value += lp.objective[j] * out.optimal_point[j];
            CHECK(value == out.optimal_value);
        }
    }
    CHECK(optimal_seen > 10);  // the stream must actually exercise the Optimal path
}
