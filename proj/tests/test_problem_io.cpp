#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>

#include "lfvop/core.hpp"
#include "lfvop/errors.hpp"
#include "lfvop/problem_io.hpp"

using namespace lfvop;

namespace {

/// Message of the ParseError thrown by `body`, or "" when nothing is thrown.
std::string parse_failure(const std::function<void()>& body) {
    try {
        body();
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

bool mentions(const std::string& message, const std::string& needle) {
    return message.find(needle) != std::string::npos;
}

const char* kHalfplaneDoc = R"({
  "n": 2,
  "objectives": [
    { "a": [1, 0], "alpha": 0, "b": [0, 0], "beta": 1 },
    { "a": [0, 1], "alpha": 0, "b": [0, 0], "beta": 1 }
  ],
  "constraints": { "C": [[-1, 0]], "d": [0] }
})";

}  // namespace

TEST_CASE("a plain document parses to the expected problem") {
    const Problem problem = parse_problem_text(kHalfplaneDoc);
    CHECK(problem.dimension() == 2);
    CHECK(problem.num_objectives() == 2);
    CHECK(problem.feasible_set.num_constraints() == 1);
    CHECK(problem.objectives[0].a == RationalVector{1, 0});
    CHECK(problem.objectives[0].is_linear());
    CHECK(problem.feasible_set.C(0, 0) == -1);
    CHECK(problem.feasible_set.d == RationalVector{0});
}

TEST_CASE("numbers are admitted as integers, p/q strings, and exact decimals") {
    const Problem problem = parse_problem_text(R"({
      "n": 1,
      "objectives": [ { "a": ["-3/4"], "alpha": "0.1", "b": [2], "beta": "7/2" } ],
      "constraints": { "C": [["0.25"]], "d": ["-2"] }
    })");
    CHECK(problem.objectives[0].a[0] == make_rational(-3, 4));
    CHECK(problem.objectives[0].alpha == make_rational(1, 10));
    CHECK(problem.objectives[0].b[0] == 2);
    CHECK(problem.objectives[0].beta == make_rational(7, 2));
    CHECK(problem.feasible_set.C(0, 0) == make_rational(1, 4));
    CHECK(problem.feasible_set.d[0] == -2);
}

TEST_CASE("floating-point literals are rejected with their position") {
    const std::string message = parse_failure([] {
        parse_problem_text(R"({
          "n": 1,
          "objectives": [ { "a": [1], "alpha": 0.5, "b": [0], "beta": 1 } ],
          "constraints": { "C": [[1]], "d": [1] }
        })");
    });
    CHECK(mentions(message, "/objectives/0/alpha"));
    CHECK(mentions(message, "inexact"));
}

TEST_CASE("unknown fields are rejected at every level") {
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({"n": 1, "objectives": [], "constraints": {}, "extra": 1})");
          }),
          "unknown field \"extra\""));
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({
                "n": 1,
                "objectives": [ { "a": [1], "alpha": 0, "b": [0], "beta": 1, "gamma": 2 } ],
                "constraints": { "C": [[1]], "d": [1] }
              })");
          }),
          "unknown field \"gamma\""));
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({
                "n": 1,
                "objectives": [ { "a": [1], "alpha": 0, "b": [0], "beta": 1 } ],
                "constraints": { "C": [[1]], "d": [1], "e": [1] }
              })");
          }),
          "unknown field \"e\""));
}

TEST_CASE("missing fields are named") {
    const std::string message = parse_failure([] {
        parse_problem_text(R"({
          "n": 1,
          "objectives": [ { "a": [1], "alpha": 0, "beta": 1 } ],
          "constraints": { "C": [[1]], "d": [1] }
        })");
    });
    CHECK(mentions(message, "missing field \"b\""));
    CHECK(mentions(message, "/objectives/0"));
}

TEST_CASE("vector lengths are checked against the declared dimension") {
    const std::string message = parse_failure([] {
        parse_problem_text(R"({
          "n": 2,
          "objectives": [ { "a": [1], "alpha": 0, "b": [0, 0], "beta": 1 } ],
          "constraints": { "C": [[1, 0]], "d": [1] }
        })");
    });
    CHECK(mentions(message, "/objectives/0/a"));
    CHECK(mentions(message, "expected 2 entries, found 1"));

    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({
                "n": 1,
                "objectives": [ { "a": [1], "alpha": 0, "b": [0], "beta": 1 } ],
                "constraints": { "C": [[1], [2]], "d": [1] }
              })");
          }),
          "/constraints/d"));
}

TEST_CASE("the dimension must be a positive integer") {
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({"n": 0, "objectives": [], "constraints": {}})");
          }),
          "positive integer"));
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({"n": "2", "objectives": [], "constraints": {}})");
          }),
          "positive integer"));
}

TEST_CASE("a zero denominator inside a document is a positioned parse error") {
    const std::string message = parse_failure([] {
        parse_problem_text(R"({
          "n": 1,
          "objectives": [ { "a": ["1/0"], "alpha": 0, "b": [0], "beta": 1 } ],
          "constraints": { "C": [[1]], "d": [1] }
        })");
    });
    CHECK(mentions(message, "/objectives/0/a/0"));
}

TEST_CASE("malformed JSON reports line and column") {
    const std::string message = parse_failure([] { parse_problem_text("{\"n\": 1,\n  oops"); });
    CHECK(mentions(message, "line 2"));
}

TEST_CASE("empty objective and constraint arrays are rejected") {
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({"n": 1, "objectives": [], "constraints": {"C": [[1]], "d": [1]}})");
          }),
          "nonempty array of objectives"));
    CHECK(mentions(parse_failure([] {
              parse_problem_text(R"({
                "n": 1,
                "objectives": [ { "a": [1], "alpha": 0, "b": [0], "beta": 1 } ],
                "constraints": { "C": [], "d": [] }
              })");
          }),
          "nonempty array of rows"));
}

TEST_CASE("load_problem reads fixture files and rejects missing paths") {
    const Problem problem = load_problem(std::string(FIXTURE_DIR) + "/fractional_box.json");
    CHECK(problem.dimension() == 2);
    CHECK(problem.num_objectives() == 2);
    CHECK(problem.feasible_set.num_constraints() == 4);
    CHECK(validate_problem(problem).valid());

    CHECK(mentions(parse_failure([] { load_problem("/no/such/file.json"); }),
          "cannot open problem file"));
}

TEST_CASE("all shipped fixtures parse and validate") {
    for (const char* name : {"halfplane_identity.json", "simplex_linear.json", "fractional_box.json"}) {
        CAPTURE(name);
        const Problem problem = load_problem(std::string(FIXTURE_DIR) + "/" + name);
        CHECK(validate_problem(problem).valid());
    }
}
