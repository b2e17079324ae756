#include "lfvop/problem_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfvop/errors.hpp"

namespace lfvop {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("at " + where + ": " + what);
}

Rational read_number(const json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return Rational(Integer(value.get<std::int64_t>()));
    }
    if (value.is_number_unsigned()) {
        return Rational(Integer(value.get<std::uint64_t>()));
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    if (value.is_number_float()) {
        fail(where, "floating-point literals are inexact; write the value as a string such as \"1/10\" or \"0.1\"");
    }
    fail(where, "expected an integer or a rational string");
}

const json& member(const json& object, const std::string& key, const std::string& where) {
    if (!object.is_object()) fail(where, "expected an object");
    const auto it = object.find(key);
    if (it == object.end()) fail(where, "missing field \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known, const std::string& where) {
    for (const auto& [key, unused] : object.items()) {
        (void)unused;
        bool recognized = false;
        for (const char* k : known) {
            if (key == k) {
                recognized = true;
                break;
            }
        }
        if (!recognized) fail(where, "unknown field \"" + key + "\"");
    }
}

RationalVector read_vector(const json& value, std::size_t expected, const std::string& where) {
    if (!value.is_array()) fail(where, "expected an array of numbers");
    if (value.size() != expected) {
        fail(where, "expected " + std::to_string(expected) + " entries, found " + std::to_string(value.size()));
    }
    RationalVector result(value.size());
    for (std::size_t k = 0; k < value.size(); ++k) {
        result[k] = read_number(value[k], where + "/" + std::to_string(k));
    }
    return result;
}

std::size_t read_dimension(const json& doc) {
    const json& n = member(doc, "n", "/");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1) {
        fail("/n", "expected a positive integer dimension");
    }
    return static_cast<std::size_t>(n.get<std::int64_t>());
}

Problem parse_document(const json& doc) {
    if (!doc.is_object()) fail("/", "expected a problem object");
    reject_unknown_keys(doc, {"n", "objectives", "constraints"}, "/");
    const std::size_t n = read_dimension(doc);

    const json& objectives_node = member(doc, "objectives", "/");
    if (!objectives_node.is_array() || objectives_node.empty()) {
        fail("/objectives", "expected a nonempty array of objectives");
    }
    std::vector<LinearFractionalObjective> objectives;
    objectives.reserve(objectives_node.size());
    for (std::size_t i = 0; i < objectives_node.size(); ++i) {
        const std::string where = "/objectives/" + std::to_string(i);
        const json& node = objectives_node[i];
        if (!node.is_object()) fail(where, "expected an objective object");
        reject_unknown_keys(node, {"a", "alpha", "b", "beta"}, where);
        LinearFractionalObjective obj;
        obj.a = read_vector(member(node, "a", where), n, where + "/a");
        obj.alpha = read_number(member(node, "alpha", where), where + "/alpha");
        obj.b = read_vector(member(node, "b", where), n, where + "/b");
        obj.beta = read_number(member(node, "beta", where), where + "/beta");
        objectives.push_back(std::move(obj));
    }

    const json& constraints = member(doc, "constraints", "/");
    if (!constraints.is_object()) fail("/constraints", "expected an object with \"C\" and \"d\"");
    reject_unknown_keys(constraints, {"C", "d"}, "/constraints");
    const json& C_node = member(constraints, "C", "/constraints");
    if (!C_node.is_array() || C_node.empty()) {
        fail("/constraints/C", "expected a nonempty array of rows");
    }
    RationalMatrix C;
    for (std::size_t r = 0; r < C_node.size(); ++r) {
        C.append_row(read_vector(C_node[r], n, "/constraints/C/" + std::to_string(r)));
    }
    RationalVector d = read_vector(member(constraints, "d", "/constraints"), C.rows(), "/constraints/d");

    return make_problem(std::move(objectives), PolyhedralSet{std::move(C), std::move(d)});
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_document(doc);
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open problem file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

}  // namespace lfvop
