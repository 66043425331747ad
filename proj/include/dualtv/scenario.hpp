#pragma once
// Scenario-file ingestion. The format is a JSON document
//
//   {"scenarios": [{"rule": "deduction",
//                   "premise1": {"value": 0.6, "confidence": 0.8},
//                   "premise2": {"value": 0.7, "confidence": 0.9},
//                   "k": 0.5,
//                   "variants": ["independence-simplified"],
//                   "terms": {"s_a": 0.4, "s_b": 0.4, "s_c": 0.6},
//                   "expected": {"nars.power": 0.3024}}, ...]}
//
// k, terms and expected are optional (k defaults to 0.5). Expected keys use
// the resolve_quantity grammar and are checked at kReferenceTolerance.

#include "dualtv/comparison.hpp"

#include <iosfwd>

namespace dualtv {

struct Scenario {
    RuleKind rule = RuleKind::Deduction;
    TruthValue premise1;
    TruthValue premise2;
    double k = 0.5;
    std::vector<PlnVariant> variants;
    std::optional<TermProbabilities> terms;
    std::vector<std::pair<std::string, double>> expected;  // document order
};

struct ScenarioFile {
    std::vector<Scenario> scenarios;
};

// Throws UsageError carrying an entry-and-field diagnostic on any malformed
// or out-of-range input, e.g. "scenarios[2].premise1: ... 'confidence' ...".
ScenarioFile parse_scenario_file(std::istream& in);
// Unreadable path throws Error; content problems follow parse_scenario_file.
ScenarioFile load_scenario_file(const std::string& path);

struct ScenarioOutcome {
    std::size_t index = 0;
    ComparisonRecord record;
    std::vector<ValueCheck> checks;
    bool all_pass = true;
};

// Evaluates every scenario in order; calculus errors propagate.
std::vector<ScenarioOutcome> evaluate_scenarios(const ScenarioFile& file);

}  // namespace dualtv
