#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfvop {

/// Runs one command given argv-style arguments (program name excluded, in
/// natural order). Reports go to `out`; errors go to `err` as
/// {"error": {"code", "message"}} JSON.
///
/// Exit codes: 0 success, 1 self-test failures, 2 input error,
/// 3 invalid instance (empty feasible set or nonpositive denominator on it).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfvop
