#pragma once

#include <string>

#include "lfvop/core.hpp"

namespace lfvop {

/// Parses a problem document:
///   {"n": 2,
///    "objectives": [{"a": [1, 0], "alpha": 0, "b": [0, 0], "beta": 1}, ...],
///    "constraints": {"C": [[-1, 0]], "d": [0]}}
/// Numbers are integers or strings ("p/q" or exact decimals like "0.25").
/// Binary floats are rejected; every diagnostic carries the document position.
Problem parse_problem_text(const std::string& text);

/// parse_problem_text over the contents of a file.
Problem load_problem(const std::string& path);

}  // namespace lfvop
