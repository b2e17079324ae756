#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lfvop {

/// Base class for all library errors. `code()` is the stable machine-readable
/// name used in CSV status columns and for exit-code mapping in the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& m) : Error("zero_denominator", m) {}
};

struct MalformedLP : Error {
    explicit MalformedLP(const std::string& m) : Error("malformed_lp", m) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error("dimension_mismatch", m) {}
};

/// A fractional objective has a nonpositive denominator at the candidate point.
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& m) : Error("domain_violation", m) {}
};

/// The queried candidate point lies outside the feasible set.
struct InfeasibleCandidate : Error {
    explicit InfeasibleCandidate(const std::string& m) : Error("infeasible_candidate", m) {}
};

struct NegativeEpsilon : Error {
    explicit NegativeEpsilon(const std::string& m) : Error("negative_epsilon", m) {}
};

struct EmptyFeasibleSet : Error {
    explicit EmptyFeasibleSet(const std::string& m) : Error("empty_feasible_set", m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

/// Some objective denominator fails to stay strictly positive on the whole
/// feasible set; the instance is rejected as invalid.
struct StandingConditionViolated : Error {
    explicit StandingConditionViolated(const std::string& m) : Error("standing_condition_violated", m) {}
};

}  // namespace lfvop
