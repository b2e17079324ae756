#include "lfvop/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfvop/certify.hpp"
#include "lfvop/core.hpp"
#include "lfvop/errors.hpp"
#include "lfvop/oracle.hpp"
#include "lfvop/problem_io.hpp"
#include "lfvop/report.hpp"
#include "lfvop/selftest.hpp"

namespace lfvop {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvalidInstance = 3;

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
    nlohmann::ordered_json json;
    json["error"]["code"] = code;
    json["error"]["message"] = message;
    err << json.dump(2) << "\n";
}

int exit_code_for(const Error& e) {
    if (e.code() == "empty_feasible_set" || e.code() == "standing_condition_violated")
        return kExitInvalidInstance;
    return kExitInputError;
}

RationalVector parse_rational_list(const std::string& text, const std::string& flag) {
    RationalVector values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        try {
            values.push_back(parse_rational(token));
        } catch (const Error& e) {
            throw ParseError(flag + ": " + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

std::pair<Rational, Rational> parse_box(const std::string& text) {
    const std::size_t separator = text.find("..");
    if (separator == std::string::npos)
        throw ParseError("--box: expected lo..hi, got \"" + text + "\"");
    Rational lo, hi;
    try {
        lo = parse_rational(text.substr(0, separator));
        hi = parse_rational(text.substr(separator + 2));
    } catch (const Error& e) {
        throw ParseError("--box: " + std::string(e.what()));
    }
    if (lo > hi) throw ParseError("--box: lower bound exceeds upper bound in \"" + text + "\"");
    return {lo, hi};
}

/// Turns a failed instance validation into the matching exception so all
/// commands share one exit-code mapping.
void require_valid(const ValidationReport& validation) {
    switch (validation.status) {
        case ValidationStatus::Valid:
            return;
        case ValidationStatus::EmptyFeasibleSet:
            throw EmptyFeasibleSet("the constraint system C x <= d has no solutions");
        case ValidationStatus::StandingConditionViolated: {
            const std::size_t index = *validation.violating_objective;
            std::ostringstream message;
            message << "denominator of objective " << index + 1
                    << " is not strictly positive on the whole feasible set (";
            const auto& minimum = validation.denominator_minima[index];
            if (minimum)
                message << "minimum " << to_string(*minimum);
            else
                message << "unbounded below";
            message << ")";
            throw StandingConditionViolated(message.str());
        }
    }
}

struct CommandOptions {
    std::string problem_file;
    std::string point_text;
    std::string epsilon_text;
    std::string mode = "weak";
    std::vector<std::string> box_texts;
    std::vector<std::size_t> steps_values;
    std::string out_file;
    bool recheck = false;
    std::uint64_t seed = 42;
    std::size_t count = 200;
};

int cmd_check(const CommandOptions& options, std::ostream& out) {
    const Problem problem = load_problem(options.problem_file);
    const ValidationReport validation = validate_problem(problem);
    require_valid(validation);
    const Query query{parse_rational_list(options.point_text, "--point"),
                      parse_rational_list(options.epsilon_text, "--epsilon")};
    require_query(problem, query);
    const Classification result = classify(problem, query);
    out << check_report(problem, query, validation, result, options.recheck).dump(2) << "\n";
    return kExitOk;
}

int cmd_certify(const CommandOptions& options, std::ostream& out) {
    const Problem problem = load_problem(options.problem_file);
    const ValidationReport validation = validate_problem(problem);
    require_valid(validation);
    const Query query{parse_rational_list(options.point_text, "--point"),
                      parse_rational_list(options.epsilon_text, "--epsilon")};
    require_query(problem, query);
    const std::optional<Certificate> certificate = options.mode == "interior"
                                                       ? find_interior_certificate(problem, query)
                                                       : find_weak_certificate(problem, query);
    out << certify_report(problem, query, validation, options.mode, certificate, options.recheck).dump(2)
        << "\n";
    return kExitOk;
}

int cmd_sweep(const CommandOptions& options, std::ostream& out) {
    const Problem problem = load_problem(options.problem_file);
    const ValidationReport validation = validate_problem(problem);
    require_valid(validation);
    const RationalVector epsilon = parse_rational_list(options.epsilon_text, "--epsilon");

    const std::size_t n = problem.dimension();
    if (options.box_texts.size() != n)
        throw DimensionMismatch("--box given " + std::to_string(options.box_texts.size()) +
                                " times for a problem in dimension " + std::to_string(n));
    std::vector<std::size_t> steps = options.steps_values;
    if (steps.size() == 1) steps.assign(n, steps.front());
    if (steps.size() != n)
        throw DimensionMismatch("--steps given " + std::to_string(options.steps_values.size()) +
                                " times for a problem in dimension " + std::to_string(n) +
                                " (give one shared value or one per axis)");

    GridSpec grid;
    for (std::size_t j = 0; j < n; ++j) {
        const auto [lo, hi] = parse_box(options.box_texts[j]);
        grid.axes.push_back(GridAxis{lo, hi, steps[j]});
    }

    const std::string csv = sweep_csv(problem, sweep(problem, epsilon, grid));
    if (options.out_file.empty()) {
        out << csv;
    } else {
        std::ofstream file(options.out_file);
        if (!file) throw Error("io_error", "cannot open output file: " + options.out_file);
        file << csv;
    }
    return kExitOk;
}

int cmd_selftest(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    const std::vector<SuiteResult> suites = run_all(options.seed, options.count);
    bool all_passed = true;
    std::size_t total_cases = 0;
    for (const auto& suite : suites) {
        total_cases += suite.cases;
        all_passed = all_passed && suite.passed();
        out << suite.name << ": " << suite.cases << " cases, " << suite.failures << " failures\n";
        if (!suite.first_failure.empty()) out << "  first failure: " << suite.first_failure << "\n";
    }
    out << (all_passed ? "all suites passed" : "self-test FAILED") << " (seed " << options.seed
        << ", count " << options.count << ")\n";
    if (total_cases == 0) err << "warning: 0 cases were run; the pass is vacuous\n";
    return all_passed ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decider of epsilon-efficiency for linear fractional vector optimization "
                 "over polyhedral feasible sets",
                 "lfvop"};
    app.require_subcommand(1);
    CommandOptions options;

    const char* point_help = "Candidate point: comma-separated rationals (\"1/2,0\")";
    const char* epsilon_help = "Componentwise tolerance: comma-separated nonnegative rationals";

    CLI::App* check = app.add_subcommand("check", "Classify one candidate point and print a JSON report");
    check->add_option("problem", options.problem_file, "Problem file (JSON)")->required();
    check->add_option("--point", options.point_text, point_help)->required();
    check->add_option("--epsilon", options.epsilon_text, epsilon_help)->required();
    check->add_flag("--recheck", options.recheck,
                    "Independently re-verify every certificate and witness in the report");

    CLI::App* certify = app.add_subcommand("certify", "Search for a multiplier certificate only");
    certify->add_option("problem", options.problem_file, "Problem file (JSON)")->required();
    certify->add_option("--point", options.point_text, point_help)->required();
    certify->add_option("--epsilon", options.epsilon_text, epsilon_help)->required();
    certify->add_option("--mode", options.mode, "weak: any lambda >= 0; interior: lambda > 0 componentwise")
        ->check(CLI::IsMember({"weak", "interior"}))
        ->required();
    certify->add_flag("--recheck", options.recheck,
                      "Independently re-verify the certificate through the inner LP");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Classify a grid of points and emit CSV");
    sweep_cmd->add_option("problem", options.problem_file, "Problem file (JSON)")->required();
    sweep_cmd->add_option("--epsilon", options.epsilon_text, epsilon_help)->required();
    sweep_cmd
        ->add_option("--box", options.box_texts,
                     "Axis range lo..hi in exact rationals; repeat once per coordinate")
        ->required();
    sweep_cmd
        ->add_option("--steps", options.steps_values,
                     "Grid points per axis; one shared value or one per coordinate")
        ->required();
    sweep_cmd->add_option("--out", options.out_file, "Write the CSV to this file instead of stdout");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
    selftest->add_option("--seed", options.seed, "Seed for the case streams (default 42)");
    selftest->add_option("--count", options.count,
                         "Case budget for the certificate suites; the others scale from it (default 200)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e, out, err);  // --help and friends
        emit_error(err, "usage_error", e.what());
        return kExitInputError;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(options, out);
        if (app.got_subcommand(certify)) return cmd_certify(options, out);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(options, out);
        return cmd_selftest(options, out, err);
    } catch (const Error& e) {
        emit_error(err, e.code(), e.what());
        return exit_code_for(e);
    }
}

}  // namespace lfvop
