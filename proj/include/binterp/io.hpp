#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON interchange.
 *
 *   Rational     "p/q" or "p"
 *   prefix       comma-separated rationals, one sequence per line
 *   recurrence   "<charpoly>;<initial terms>", e.g. "t^2-t-1;2,1"
 *                or {"charpoly": ["1","-1","-1"], "initial": ["2","1"]}
 *   operator     {"h": "1/2", "y": "1/2"}
 *   fixed point  {"operator": {...}, "verified_length": N, "fixed": bool, "first_mismatch": i | null}
 *   hankel       ["k0", "k1", ...]
 */

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "binterp/catalog.hpp"
#include "binterp/error.hpp"
#include "binterp/fixed_points.hpp"
#include "binterp/hankel.hpp"
#include "binterp/operator.hpp"
#include "binterp/polynomial.hpp"
#include "binterp/rational.hpp"
#include "binterp/sequences.hpp"

namespace binterp {

using json = nlohmann::json;

inline std::string to_string(const SequencePrefix& a) { return join(a.terms()); }

inline SequencePrefix parse_prefix(std::string_view text) {
    auto terms = parse_rational_list(text);
    if (terms.empty()) throw parse_error("empty sequence");
    return SequencePrefix(std::move(terms));
}

/// One prefix per non-blank line.
inline std::vector<SequencePrefix> read_prefixes(std::istream& in) {
    std::vector<SequencePrefix> out;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        out.push_back(parse_prefix(line));
    }
    return out;
}

inline std::string to_string(const LinearRecurrence& rec) {
    return to_string(rec.charpoly()) + ";" + join(rec.initial());
}

inline LinearRecurrence parse_recurrence(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw parse_error("recurrence must look like '<charpoly>;<initial terms>'");
    MonicPolynomial f = parse_polynomial(text.substr(0, semi));
    try {
        return LinearRecurrence(std::move(f), parse_rational_list(text.substr(semi + 1)));
    } catch (const invalid_argument& e) {
        throw parse_error(e.what());
    }
}

// JSON ----------------------------------------------------------------------

inline json rational_to_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational{j.get<long long>()};
    throw parse_error("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline json rationals_to_json(const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(rational_to_json(x));
    return out;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

inline json to_json(const LinearRecurrence& rec) {
    return {{"charpoly", rationals_to_json(rec.charpoly().coefficients())},
            {"initial", rationals_to_json(rec.initial())}};
}

inline LinearRecurrence recurrence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("charpoly") || !j.contains("initial"))
        throw parse_error("recurrence record needs \"charpoly\" and \"initial\"");
    try {
        return LinearRecurrence(MonicPolynomial::from_coefficients(rationals_from_json(j.at("charpoly"))),
                                rationals_from_json(j.at("initial")));
    } catch (const invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline json to_json(const BinomialOperator& op) { return {{"h", rational_to_json(op.h)}, {"y", rational_to_json(op.y)}}; }

inline BinomialOperator operator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("y")) throw parse_error("operator record needs \"h\" and \"y\"");
    return {rational_from_json(j.at("h")), rational_from_json(j.at("y"))};
}

inline json to_json(const FixedPointReport& report) {
    json j{{"operator", to_json(report.op)}, {"verified_length", report.verified_length}, {"fixed", report.fixed}};
    j["first_mismatch"] = report.first_mismatch ? json(*report.first_mismatch) : json(nullptr);
    return j;
}

inline json to_json(const HankelResult& result) { return rationals_to_json(result.determinants); }

/// "<key> <lo>..<hi> <pass|fail> expected=<pass|fail> mismatch=<i|->"
inline std::string to_string(const IdentityCase& c) {
    std::string out = c.key + " " + std::to_string(c.lo) + ".." + std::to_string(c.hi) + " " +
                      (c.passed ? "pass" : "fail") + " expected=" + (c.expected_pass ? "pass" : "fail") +
                      " mismatch=" + (c.first_mismatch ? std::to_string(*c.first_mismatch) : std::string("-"));
    return out;
}

}  // namespace binterp
