#pragma once

#include <optional>

#include "lfvop/core.hpp"
#include "lfvop/dominance.hpp"
#include "lfvop/linalg.hpp"

namespace lfvop {

/// Linearization of the membership question at (x_bar, epsilon): the
/// candidate is weakly epsilon-efficient iff no y in K has A y + b < 0
/// componentwise. Row i expands to
///   (A y + b)_i = s_i <grad f_i(x_bar), y - x_bar> + eps_i (b_i . y + beta_i)
/// with s_i = b_i . x_bar + beta_i.
struct CertificateSystem {
    RationalMatrix A;  // m x n
    RationalVector b;  // length m
};

CertificateSystem build_certificate_system(const Problem& problem, const Query& query);

enum class CertificateKind { Boundary, Interior };

/// Multiplier witness: lambda >= 0 (componentwise positive for Interior),
/// sum lambda = 1, and mu >= 0 is the LP-dual evidence that
/// lambda^T (A y + b) >= 0 on all of K:
///   A^T lambda + C^T mu = 0  and  b^T lambda - d^T mu >= 0.
struct Certificate {
    RationalVector lambda;  // length m
    RationalVector mu;      // length p
    CertificateKind kind = CertificateKind::Boundary;
};

/// Searches for any admissible lambda by solving the joint (lambda, mu)
/// feasibility LP. nullopt means no certificate exists, which exactly refutes
/// weak epsilon-efficiency of the candidate.
std::optional<Certificate> find_weak_certificate(const Problem& problem, const Query& query);

/// Searches for a componentwise-positive lambda by maximizing the smallest
/// component subject to the same dual equations; succeeds iff the optimum is
/// strictly positive. Success is sufficient (not necessary) for
/// epsilon-efficiency.
std::optional<Certificate> find_interior_certificate(const Problem& problem, const Query& query);

struct VerificationResult {
    bool valid = false;
    /// min over K of lambda^T (A y + b); nullopt when unbounded below.
    std::optional<Rational> inner_optimum;
};

/// Independent check of a certificate's lambda: solves the inner LP
/// min { lambda^T (A y + b) : y in K } directly and accepts iff the optimum
/// is >= 0. Deliberately does not reuse the dual equations.
VerificationResult verify_certificate(const Problem& problem, const Query& query, const Certificate& cert);

enum class Verdict {
    NotWeaklyEpsEfficient,
    WeaklyEpsEfficientOnly,
    EpsEfficient,
    /// Weak certificate found but no interior one, and no oracle refinement
    /// was requested; epsilon-efficiency is left undecided.
    WeakCertifiedOnly,
};

enum class RefinementSource { None, Oracle };

struct Classification {
    Verdict verdict = Verdict::WeakCertifiedOnly;
    std::optional<Certificate> weak_certificate;
    std::optional<Certificate> interior_certificate;
    std::optional<DominanceWitness> witness;
    RefinementSource refinement = RefinementSource::None;
};

/// Full decision pipeline: weak certificate search, then interior search,
/// then (with refine_with_oracle) definition-level dominance checks to close
/// the gap the interior test leaves open and to produce witnesses. Throws
/// std::logic_error if the certificate and oracle routes ever disagree.
Classification classify(const Problem& problem, const Query& query, bool refine_with_oracle = true);

}  // namespace lfvop
