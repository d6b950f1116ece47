#include "scenario.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "error.hpp"

namespace apxalg {

namespace {

using ordered_json = nlohmann::ordered_json;

rational_function constant_one() { return rational_function(rational(1)); }

std::uint64_t parse_finite_multiplicity(const std::string& text) {
    if (text.empty() || text.size() > 18 ||
        text.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("finite preset needs a positive integer multiplicity: finite:<d>");
    const std::uint64_t d = std::stoull(text);
    if (d == 0) throw usage_error("finite preset needs a positive multiplicity, got finite:0");
    return d;
}

const ordered_json& require_field(const ordered_json& doc, const char* key,
                                  const std::string& where) {
    const auto it = doc.find(key);
    if (it == doc.end())
        throw validation_error("scenario field \"" + where + "\" is missing");
    return *it;
}

std::string require_string(const ordered_json& v, const std::string& where) {
    if (!v.is_string())
        throw validation_error("scenario field \"" + where + "\" must be a string");
    return v.get<std::string>();
}

rational parse_rational_field(const ordered_json& v, const std::string& where) {
    if (!v.is_string())
        throw validation_error("scenario field \"" + where +
                               "\" must be an exact rational string like \"1/3\"");
    try {
        return rational::parse(v.get<std::string>());
    } catch (const error& e) {
        throw validation_error("scenario field \"" + where + "\": " + e.what());
    }
}

std::vector<rational> parse_rational_list(const ordered_json& v, const std::string& where) {
    if (!v.is_array())
        throw validation_error("scenario field \"" + where +
                               "\" must be a list of exact rational strings");
    std::vector<rational> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_rational_field(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

point_set_ref parse_points(const ordered_json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "integers") return point_set::integers();
        throw validation_error(
            "scenario field \"points\" must be \"integers\" or a list of rational strings");
    }
    return point_set::from_list(parse_rational_list(v, "points"));
}

coefficient_rule parse_rule(const ordered_json& v) {
    if (!v.is_object())
        throw validation_error("scenario field \"rule\" must be an object with a \"kind\"");
    const std::string kind = require_string(require_field(v, "kind", "rule.kind"), "rule.kind");
    if (kind == "geometric") {
        return coefficient_rule::geometric(
            parse_rational_field(require_field(v, "scale", "rule.scale"), "rule.scale"),
            parse_rational_field(require_field(v, "ratio", "rule.ratio"), "rule.ratio"));
    }
    if (kind == "harmonic") return coefficient_rule::harmonic();
    if (kind == "finite-table") {
        return coefficient_rule::finite_table(
            parse_rational_list(require_field(v, "values", "rule.values"), "rule.values"));
    }
    if (kind == "custom-table") {
        const auto cutoff_it = v.find("cutoff");
        if (cutoff_it == v.end())
            throw validation_error(
                "custom-table rule needs a declared support cutoff (scenario field "
                "\"rule.cutoff\")");
        if (!cutoff_it->is_number_unsigned())
            throw validation_error(
                "scenario field \"rule.cutoff\" must be a nonnegative integer");
        const auto& entries = require_field(v, "entries", "rule.entries");
        if (!entries.is_object())
            throw validation_error(
                "scenario field \"rule.entries\" must map index strings to rational strings");
        std::vector<std::pair<std::uint64_t, rational>> sparse;
        for (const auto& [key, val] : entries.items()) {
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos ||
                key.size() > 18)
                throw validation_error(
                    "custom-table index must be a nonnegative integer: got \"" + key + "\"");
            sparse.emplace_back(std::stoull(key),
                                parse_rational_field(val, "rule.entries[" + key + "]"));
        }
        std::sort(sparse.begin(), sparse.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return coefficient_rule::custom_table(std::move(sparse),
                                              cutoff_it->get<std::uint64_t>());
    }
    throw validation_error("unknown rule kind \"" + kind +
                           "\" (expected geometric, harmonic, finite-table or custom-table)");
}

rational_function parse_b1(const ordered_json& doc) {
    const auto it = doc.find("b1");
    if (it == doc.end()) return constant_one();  // the default marked element
    if (!it->is_object())
        throw validation_error(
            "scenario field \"b1\" must be an object with coefficient lists");
    polynomial num(parse_rational_list(require_field(*it, "numerator", "b1.numerator"),
                                       "b1.numerator"));
    polynomial den = polynomial::one();
    const auto den_it = it->find("denominator");
    if (den_it != it->end()) den = polynomial(parse_rational_list(*den_it, "b1.denominator"));
    try {
        return rational_function(std::move(num), std::move(den));
    } catch (const error& e) {
        throw validation_error(std::string("scenario field \"b1\": ") + e.what());
    }
}

scenario from_document(const ordered_json& doc) {
    if (!doc.is_object()) throw validation_error("scenario document must be a JSON object");
    std::string name = require_string(require_field(doc, "name", "name"), "name");
    if (name.empty()) throw validation_error("scenario field \"name\" must not be empty");
    std::string description;
    if (const auto it = doc.find("description"); it != doc.end())
        description = require_string(*it, "description");
    point_set_ref pts = parse_points(require_field(doc, "points", "points"));
    coefficient_rule rule = parse_rule(require_field(doc, "rule", "rule"));
    formal_divisor divisor(std::move(pts), std::move(rule));
    rational_function b1 = parse_b1(doc);
    return scenario{std::move(name), std::move(description),
                    graded_series(std::move(divisor), std::move(b1))};
}

ordered_json rule_document(const coefficient_rule& rule) {
    ordered_json out;
    switch (rule.rule_kind()) {
        case coefficient_rule::kind::geometric:
            out["kind"] = "geometric";
            out["scale"] = rule.scale().str();
            out["ratio"] = rule.ratio().str();
            return out;
        case coefficient_rule::kind::harmonic:
            out["kind"] = "harmonic";
            return out;
        case coefficient_rule::kind::finite_table: {
            out["kind"] = "finite-table";
            ordered_json values = ordered_json::array();
            for (const auto& v : rule.table()) values.push_back(v.str());
            out["values"] = std::move(values);
            return out;
        }
        case coefficient_rule::kind::custom_table: {
            out["kind"] = "custom-table";
            ordered_json entries = ordered_json::object();
            for (const auto& [i, v] : rule.sparse_table())
                entries[std::to_string(i)] = v.str();
            out["entries"] = std::move(entries);
            out["cutoff"] = rule.cutoff();
            return out;
        }
    }
    throw internal_error("unreachable coefficient-rule kind");
}

ordered_json coefficient_list(const polynomial& p) {
    ordered_json out = ordered_json::array();
    if (p.is_zero()) {
        out.push_back("0");
        return out;
    }
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

}  // namespace

scenario preset_scenario(const std::string& name) {
    if (name == "chen") {
        return scenario{
            "chen",
            "geometric halving coefficients on the integer points: approximable but with "
            "unbounded valuation support",
            graded_series(
                formal_divisor(point_set::integers(),
                               coefficient_rule::geometric(rational(1), rational(1, 2))),
                constant_one())};
    }
    if (name == "harmonic") {
        return scenario{
            "harmonic",
            "harmonic coefficients on the integer points: graded dimensions grow faster "
            "than any linear bound, so approximability fails",
            graded_series(
                formal_divisor(point_set::integers(), coefficient_rule::harmonic()),
                constant_one())};
    }
    if (name.rfind("finite:", 0) == 0) {
        const std::uint64_t d = parse_finite_multiplicity(name.substr(7));
        return scenario{
            name,
            "a single point of multiplicity " + std::to_string(d) +
                ": a sectional algebra with exactly linear growth",
            graded_series(
                formal_divisor(point_set::from_list({rational(0)}),
                               coefficient_rule::finite_table(
                                   {rational(integer(static_cast<unsigned long>(d)))})),
                constant_one())};
    }
    throw usage_error("unknown preset \"" + name +
                      "\" (expected chen, harmonic or finite:<d>)");
}

scenario load_scenario_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("scenario document is not valid JSON: ") + e.what());
    }
    return from_document(doc);
}

scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot read scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario_text(buf.str());
}

std::string save_scenario_text(const scenario& s) {
    ordered_json doc;
    doc["name"] = s.name;
    doc["description"] = s.description;
    const formal_divisor& d = s.series.divisor();
    if (d.points().is_integers()) {
        doc["points"] = "integers";
    } else {
        ordered_json pts = ordered_json::array();
        for (const auto& p : d.points().list()) pts.push_back(p.str());
        doc["points"] = std::move(pts);
    }
    doc["rule"] = rule_document(d.rule());
    ordered_json b1;
    b1["numerator"] = coefficient_list(s.series.b1().num());
    b1["denominator"] = coefficient_list(s.series.b1().den());
    doc["b1"] = std::move(b1);
    return doc.dump(2) + "\n";
}

}  // namespace apxalg
