#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lfvop/certify.hpp"
#include "lfvop/core.hpp"
#include "lfvop/oracle.hpp"

namespace lfvop {

/// All report rationals are emitted as exact "p/q" strings; key order is
/// fixed so identical runs serialize byte-identically.
using Report = nlohmann::ordered_json;

std::string verdict_name(Verdict verdict);

/// Full classification report for one candidate point. With recheck, every
/// emitted certificate is re-verified through the inner LP and every witness
/// re-evaluated against the definitions, and the outcomes are embedded.
Report check_report(const Problem& problem, const Query& query, const ValidationReport& validation,
                    const Classification& result, bool recheck);

/// Certificate-search-only report for mode "weak" or "interior".
Report certify_report(const Problem& problem, const Query& query, const ValidationReport& validation,
                      const std::string& mode, const std::optional<Certificate>& certificate, bool recheck);

/// CSV with one row per grid point:
///   x1..xn, status, verdict, lambda_1..m, witness_y1..yn, strict_index
/// status is "ok", "skipped", or "error:<code>"; strict_index is 1-based and
/// only set for witnesses that are weak with one strict component.
std::string sweep_csv(const Problem& problem, const std::vector<SweepRow>& rows);

}  // namespace lfvop
