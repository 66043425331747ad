#pragma once
// Pointwise comparison of the two calculi plus the bundled reference
// examples with their published conclusion values.

#include "dualtv/nars.hpp"
#include "dualtv/pln.hpp"
#include "dualtv/truth_core.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualtv {

enum class RuleKind { Deduction, Induction, Abduction };

// Which PLN formula to run against the NARS rule at a point. Geometry
// variants pair with Deduction only; *Full variants need TermProbabilities.
enum class PlnVariant {
    IndependenceSimplified,
    GeometryExact,
    GeometryPaperSimplified,
    IndependenceFull,
    InductionFull,
    AbductionFull,
};

std::string_view to_string(RuleKind rule);
std::string_view to_string(PlnVariant variant);
RuleKind parse_rule_kind(std::string_view name);
PlnVariant parse_pln_variant(std::string_view name);
// Splits a comma-separated list of variant names.
std::vector<PlnVariant> parse_pln_variants(std::string_view comma_list);

bool variant_valid_for(RuleKind rule, PlnVariant variant);
bool variant_needs_terms(PlnVariant variant);

// Dispatch helpers used by compare_point and the CLI. evaluate_pln enforces
// rule/variant compatibility and the terms requirement (UsageError).
InferenceResult evaluate_nars(RuleKind rule, const TruthValue& p1, const TruthValue& p2,
                              double k);
InferenceResult evaluate_pln(RuleKind rule, PlnVariant variant, const TruthValue& p1,
                             const TruthValue& p2,
                             const std::optional<TermProbabilities>& terms);

// One premise point evaluated under NARS and every requested PLN variant.
struct ComparisonRecord {
    RuleKind rule = RuleKind::Deduction;
    TruthValue premise1;
    TruthValue premise2;
    double k = 0.5;
    std::optional<TermProbabilities> terms;
    std::vector<PlnVariant> variants;  // requested evaluation order
    std::map<PlnVariant, InferenceResult> pln;
    InferenceResult nars;
    std::map<PlnVariant, double> power_delta;  // pln.power - nars.power
    std::map<PlnVariant, double> abs_power_delta;
};

// Preconditions: k > 0, no duplicate variants, every variant defined for the
// rule, and terms present exactly when some requested variant consumes them.
ComparisonRecord compare_point(RuleKind rule, const TruthValue& p1, const TruthValue& p2,
                               double k, const std::vector<PlnVariant>& variants,
                               const std::optional<TermProbabilities>& terms = std::nullopt);

// Dotted-path lookup into a record:
//   nars.value | nars.confidence | nars.power
//   pln.<variant>.value | .confidence | .power
//   power_delta.<variant> | abs_power_delta.<variant>
// Unknown paths throw UsageError.
double resolve_quantity(const ComparisonRecord& record, std::string_view key);

struct ValueCheck {
    std::string key;
    double computed = 0.0;
    double expected = 0.0;
    bool pass = false;
};

std::vector<ValueCheck> check_expected(
    const ComparisonRecord& record,
    const std::vector<std::pair<std::string, double>>& expected, double tolerance);

// Half a unit in the last decimal place of the four-digit reference values.
inline constexpr double kReferenceTolerance = 5e-4;

struct ReferenceExample {
    std::string name;
    ComparisonRecord record;
    std::vector<ValueCheck> checks;
    bool all_pass = false;
};

// The three bundled worked examples (one per rule), each premise pair run
// through both calculi at k = 0.5 and checked against its reference
// conclusion values at kReferenceTolerance.
std::vector<ReferenceExample> reference_examples();

}  // namespace dualtv
