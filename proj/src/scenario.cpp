#include "dualtv/scenario.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace dualtv {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw UsageError(path + ": " + message);
}

void require_known_fields(const ordered_json& obj, const std::set<std::string>& known,
                          const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (known.find(key) == known.end()) {
            fail(path, "unknown field '" + key + "'");
        }
    }
}

const ordered_json& require_field(const ordered_json& obj, const char* name,
                                  const std::string& path) {
    const auto it = obj.find(name);
    if (it == obj.end()) {
        fail(path, std::string("missing required field '") + name + "'");
    }
    return *it;
}

double require_number(const ordered_json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::string require_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

TruthValue parse_premise(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object {value, confidence}");
    require_known_fields(j, {"value", "confidence"}, path);
    const double value = require_number(require_field(j, "value", path), path + ".value");
    const double confidence =
        require_number(require_field(j, "confidence", path), path + ".confidence");
    try {
        return make_truth_value(value, confidence);
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

TermProbabilities parse_terms(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object {s_a, s_b, s_c}");
    require_known_fields(j, {"s_a", "s_b", "s_c"}, path);
    const double s_a = require_number(require_field(j, "s_a", path), path + ".s_a");
    const double s_b = require_number(require_field(j, "s_b", path), path + ".s_b");
    const double s_c = require_number(require_field(j, "s_c", path), path + ".s_c");
    try {
        return make_term_probabilities(s_a, s_b, s_c);
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

void check_expected_key(const std::string& key, const Scenario& scenario,
                        const std::string& path) {
    std::set<std::string> valid{"nars.value", "nars.confidence", "nars.power"};
    for (PlnVariant v : scenario.variants) {
        const std::string name(to_string(v));
        valid.insert("pln." + name + ".value");
        valid.insert("pln." + name + ".confidence");
        valid.insert("pln." + name + ".power");
        valid.insert("power_delta." + name);
        valid.insert("abs_power_delta." + name);
    }
    if (valid.find(key) == valid.end()) {
        fail(path, "unknown quantity '" + key +
                       "' (valid: nars.<field>, pln.<requested variant>.<field>, "
                       "power_delta.<requested variant>, abs_power_delta.<requested "
                       "variant> with field value|confidence|power)");
    }
}

Scenario parse_scenario(const ordered_json& entry, const std::string& path) {
    if (!entry.is_object()) fail(path, "expected an object");
    require_known_fields(
        entry, {"rule", "premise1", "premise2", "k", "variants", "terms", "expected"}, path);

    Scenario scenario;
    const std::string rule_name =
        require_string(require_field(entry, "rule", path), path + ".rule");
    try {
        scenario.rule = parse_rule_kind(rule_name);
    } catch (const UsageError& e) {
        fail(path + ".rule", e.what());
    }
    scenario.premise1 = parse_premise(require_field(entry, "premise1", path), path + ".premise1");
    scenario.premise2 = parse_premise(require_field(entry, "premise2", path), path + ".premise2");

    if (const auto it = entry.find("k"); it != entry.end()) {
        scenario.k = require_number(*it, path + ".k");
        if (!std::isfinite(scenario.k) || scenario.k <= 0.0) {
            fail(path + ".k", "k must be finite and > 0");
        }
    }

    const ordered_json& variants = require_field(entry, "variants", path);
    if (!variants.is_array()) fail(path + ".variants", "expected an array of variant names");
    for (std::size_t i = 0; i < variants.size(); ++i) {
        const std::string vpath = path + ".variants[" + std::to_string(i) + "]";
        const std::string name = require_string(variants[i], vpath);
        PlnVariant v;
        try {
            v = parse_pln_variant(name);
        } catch (const UsageError& e) {
            fail(vpath, e.what());
        }
        if (!variant_valid_for(scenario.rule, v)) {
            fail(vpath, "variant '" + name + "' is not defined for rule '" +
                            std::string(to_string(scenario.rule)) + "'");
        }
        if (std::find(scenario.variants.begin(), scenario.variants.end(), v) !=
            scenario.variants.end()) {
            fail(vpath, "variant '" + name + "' listed twice");
        }
        scenario.variants.push_back(v);
    }

    const bool any_full = std::any_of(scenario.variants.begin(), scenario.variants.end(),
                                      variant_needs_terms);
    if (const auto it = entry.find("terms"); it != entry.end()) {
        if (!any_full) {
            fail(path + ".terms", "terms given but no requested variant consumes them");
        }
        scenario.terms = parse_terms(*it, path + ".terms");
    } else if (any_full) {
        fail(path, "missing required field 'terms' (a requested full variant consumes them)");
    }

    if (const auto it = entry.find("expected"); it != entry.end()) {
        if (!it->is_object()) fail(path + ".expected", "expected an object of quantity -> value");
        for (const auto& [key, value] : it->items()) {
            check_expected_key(key, scenario, path + ".expected");
            scenario.expected.emplace_back(
                key, require_number(value, path + ".expected." + key));
        }
    }
    return scenario;
}

}  // namespace

ScenarioFile parse_scenario_file(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("scenario file: ") + e.what());
    }
    if (!doc.is_object()) {
        throw UsageError("scenario file: top level must be an object with a 'scenarios' array");
    }
    require_known_fields(doc, {"scenarios"}, "scenario file");
    const ordered_json& scenarios = require_field(doc, "scenarios", "scenario file");
    if (!scenarios.is_array()) {
        throw UsageError("scenario file: 'scenarios' must be an array");
    }
    ScenarioFile file;
    file.scenarios.reserve(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        file.scenarios.push_back(
            parse_scenario(scenarios[i], "scenarios[" + std::to_string(i) + "]"));
    }
    return file;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open scenario file '" + path + "'");
    }
    return parse_scenario_file(in);
}

std::vector<ScenarioOutcome> evaluate_scenarios(const ScenarioFile& file) {
    std::vector<ScenarioOutcome> outcomes;
    outcomes.reserve(file.scenarios.size());
    for (std::size_t i = 0; i < file.scenarios.size(); ++i) {
        const Scenario& sc = file.scenarios[i];
        ScenarioOutcome oc;
        oc.index = i;
        oc.record = compare_point(sc.rule, sc.premise1, sc.premise2, sc.k, sc.variants,
                                  sc.terms);
        oc.checks = check_expected(oc.record, sc.expected, kReferenceTolerance);
        oc.all_pass = std::all_of(oc.checks.begin(), oc.checks.end(),
                                  [](const ValueCheck& c) { return c.pass; });
        outcomes.push_back(std::move(oc));
    }
    return outcomes;
}

}  // namespace dualtv
