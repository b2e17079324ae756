#include "lfvop/certify.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lfvop/errors.hpp"
#include "lfvop/oracle.hpp"
#include "lfvop/simplex.hpp"

namespace lfvop {
namespace {

/// Joint LP over z = (lambda, mu[, t]), all of lambda and mu nonnegative:
///   A^T lambda + C^T mu = 0        (n rows)
///   sum lambda            = 1      (1 row)
///   b^T lambda - d^T mu  >= 0      (1 row)
/// and, when with_floor, t free with lambda_i - t >= 0 for every i.
LinearProgram multiplier_lp(const Problem& problem, const CertificateSystem& sys, bool with_floor) {
    const std::size_t m = problem.num_objectives();
    const std::size_t p = problem.feasible_set.num_constraints();
    const std::size_t n = problem.dimension();
    const std::size_t num_vars = m + p + (with_floor ? 1 : 0);

    LinearProgram lp(num_vars, VarKind::NonNegative);
    if (with_floor) lp.variable_bounds[m + p] = VarKind::Free;

    const auto& C = problem.feasible_set.C;
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector row(num_vars, Rational(0));
        for (std::size_t i = 0; i < m; ++i) row[i] = sys.A(i, j);
        for (std::size_t r = 0; r < p; ++r) row[m + r] = C(r, j);
        lp.add_row(std::move(row), RowKind::Equal, 0);
    }

    RationalVector normalization(num_vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) normalization[i] = 1;
    lp.add_row(std::move(normalization), RowKind::Equal, 1);

    RationalVector budget(num_vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) budget[i] = sys.b[i];
    for (std::size_t r = 0; r < p; ++r) budget[m + r] = -problem.feasible_set.d[r];
    lp.add_row(std::move(budget), RowKind::GreaterEqual, 0);

    if (with_floor) {
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector floor_row(num_vars, Rational(0));
            floor_row[i] = 1;
            floor_row[m + p] = -1;
            lp.add_row(std::move(floor_row), RowKind::GreaterEqual, 0);
        }
    }
    return lp;
}

Certificate extract_certificate(const RationalVector& z, std::size_t m, std::size_t p, CertificateKind kind) {
    Certificate cert;
    cert.lambda.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
    cert.mu.assign(z.begin() + static_cast<std::ptrdiff_t>(m), z.begin() + static_cast<std::ptrdiff_t>(m + p));
    cert.kind = kind;
    return cert;
}

}  // namespace

CertificateSystem build_certificate_system(const Problem& problem, const Query& query) {
    require_query(problem, query);
    const RationalVector denominators = denominators_at(problem, query.x_bar);

    const std::size_t m = problem.num_objectives();
    const std::size_t n = problem.dimension();
    CertificateSystem sys{RationalMatrix(m, n), RationalVector(m)};
    for (std::size_t i = 0; i < m; ++i) {
        const auto& obj = problem.objectives[i];
        const Rational& s = denominators[i];
        const Rational& eps = query.epsilon[i];
        const RationalVector g = gradient(obj, query.x_bar);
        for (std::size_t j = 0; j < n; ++j) {
            sys.A(i, j) = s * g[j] + eps * obj.b[j];
        }
        sys.b[i] = -s * dot(g, query.x_bar) + eps * obj.beta;
    }
    return sys;
}

std::optional<Certificate> find_weak_certificate(const Problem& problem, const Query& query) {
    const CertificateSystem sys = build_certificate_system(problem, query);
    const std::size_t m = problem.num_objectives();
    const std::size_t p = problem.feasible_set.num_constraints();

    const LPOutcome outcome = feasible_point(multiplier_lp(problem, sys, /*with_floor=*/false));
    if (outcome.status == LPStatus::Infeasible) return std::nullopt;
    return extract_certificate(outcome.optimal_point, m, p, CertificateKind::Boundary);
}

std::optional<Certificate> find_interior_certificate(const Problem& problem, const Query& query) {
    const CertificateSystem sys = build_certificate_system(problem, query);
    const std::size_t m = problem.num_objectives();
    const std::size_t p = problem.feasible_set.num_constraints();

    LinearProgram lp = multiplier_lp(problem, sys, /*with_floor=*/true);
    lp.objective[m + p] = -1;  // maximize the floor t

    const LPOutcome outcome = solve(lp);
    if (outcome.status == LPStatus::Infeasible) return std::nullopt;
    if (outcome.status == LPStatus::Unbounded) {
        // t <= lambda_i <= 1 under the normalization row; cannot happen.
        throw std::logic_error("interior multiplier LP cannot be unbounded");
    }
    const Rational floor = -outcome.optimal_value;
    if (floor <= 0) return std::nullopt;
    return extract_certificate(outcome.optimal_point, m, p, CertificateKind::Interior);
}

VerificationResult verify_certificate(const Problem& problem, const Query& query, const Certificate& cert) {
    const CertificateSystem sys = build_certificate_system(problem, query);
    const std::size_t m = problem.num_objectives();
    const std::size_t n = problem.dimension();
    if (cert.lambda.size() != m) {
        throw DimensionMismatch("certificate lambda has length " + std::to_string(cert.lambda.size()) +
                                ", problem has " + std::to_string(m) + " objectives");
    }
    bool any_positive = false;
    for (const Rational& l : cert.lambda) {
        if (l < 0) throw DomainViolation("certificate lambda has a negative component");
        if (l > 0) any_positive = true;
    }
    if (!any_positive) throw DomainViolation("certificate lambda is identically zero");

    // min over y in K of lambda^T (A y + b) = (A^T lambda) . y + lambda^T b.
    LinearProgram lp(n, VarKind::Free);
    for (std::size_t j = 0; j < n; ++j) {
        Rational c = 0;
        for (std::size_t i = 0; i < m; ++i) c += cert.lambda[i] * sys.A(i, j);
        lp.objective[j] = c;
    }
    const auto& K = problem.feasible_set;
    for (std::size_t r = 0; r < K.num_constraints(); ++r) {
        lp.add_row(K.C.row(r), RowKind::LessEqual, K.d[r]);
    }

    const LPOutcome outcome = solve(lp);
    if (outcome.status == LPStatus::Infeasible) {
        throw EmptyFeasibleSet("feasible set has no points");
    }
    VerificationResult result;
    if (outcome.status == LPStatus::Unbounded) {
        result.valid = false;
        return result;
    }
    result.inner_optimum = outcome.optimal_value + dot(cert.lambda, sys.b);
    result.valid = *result.inner_optimum >= 0;
    return result;
}

Classification classify(const Problem& problem, const Query& query, bool refine_with_oracle) {
    Classification result;
    result.weak_certificate = find_weak_certificate(problem, query);

    if (!result.weak_certificate) {
        result.verdict = Verdict::NotWeaklyEpsEfficient;
        if (refine_with_oracle) {
            result.witness = weak_dominates_check(problem, query);
            if (!result.witness) {
                throw std::logic_error("certificate search found no multiplier but the dominance oracle found "
                                       "no dominator; the two routes must agree");
            }
        }
        return result;
    }

    result.interior_certificate = find_interior_certificate(problem, query);
    if (result.interior_certificate) {
        result.verdict = Verdict::EpsEfficient;
        return result;
    }

    result.verdict = Verdict::WeakCertifiedOnly;
    if (refine_with_oracle) {
        result.refinement = RefinementSource::Oracle;
        result.witness = efficient_dominates_check(problem, query);
        result.verdict = result.witness ? Verdict::WeaklyEpsEfficientOnly : Verdict::EpsEfficient;
    }
    return result;
}

}  // namespace lfvop
