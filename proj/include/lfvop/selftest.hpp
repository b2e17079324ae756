#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lfvop {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Description of the first failing case (with its replay seed); empty
    /// when the suite is clean.
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Randomized cross-checks of the two independent decision routes. Every
/// suite draws one replay seed per case from its own seeded stream, so a
/// fixed (seed, count) reproduces the identical case sequence.

/// Weak certificate exists <=> no weak dominator; found certificates must
/// pass inner-LP verification and found dominators must re-verify.
SuiteResult run_equivalence_suite(std::uint64_t seed, std::size_t count);

/// Interior certificate => no efficient dominator; no efficient dominator =>
/// a weak certificate exists.
SuiteResult run_implication_suite(std::uint64_t seed, std::size_t count);

/// fractional_identity_residual == 0 exactly, and the exact gradient agrees
/// with central finite differences to 1e-6 relative error.
SuiteResult run_identity_suite(std::uint64_t seed, std::size_t count);

/// prop_i == prop_ii from cone_lemma_check on random finite point sets.
SuiteResult run_cone_suite(std::uint64_t seed, std::size_t count);

/// Exact strong duality on randomly generated solvable primal/dual pairs,
/// plus resubstitution of the reported optimal points.
SuiteResult run_lp_duality_suite(std::uint64_t seed, std::size_t count);

/// All suites. count is the case budget of the certificate suites; the
/// others scale from it (identity 5x, cone 5/2x, duality 1/2x), so the
/// default count of 200 runs 200/200/1000/500/100 cases.
std::vector<SuiteResult> run_all(std::uint64_t seed, std::size_t count);

}  // namespace lfvop
