#pragma once
// Serialization: shortest round-trip doubles, CSV rows, JSON views, and the
// fixed-precision text renderings used by the CLI.
//
// JSON is the machine-readable source of truth; the text renderer rounds to
// four decimal places and can always be re-derived from the JSON fields.

#include "dualtv/comparison.hpp"
#include "dualtv/sweep.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace dualtv {

using json = nlohmann::ordered_json;

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);
// Four decimal places; human-readable renderer only.
std::string format_fixed4(double v);

inline constexpr std::string_view kCsvHeader =
    "rule,variant,f1,c1,f2,c2,k,s_a,s_b,s_c,pln_value,pln_confidence,pln_power,"
    "nars_value,nars_confidence,nars_power,power_delta,clamped,degenerate";

// One row per (record, requested variant), header first, LF endings, UTF-8.
// The s_a/s_b/s_c cells are empty when the record carries no terms. The
// clamped/degenerate cells OR the flags of the row's PLN result and the
// shared NARS result.
void write_records_csv(std::ostream& os, const std::vector<ComparisonRecord>& records);

// Same rows as the CSV, as an array of flat objects (null for absent terms).
json record_rows_json(const ComparisonRecord& record);

json result_to_json(const InferenceResult& result);
json summary_to_json(const SweepSummary& summary);
json examples_to_json(const std::vector<ReferenceExample>& examples);

std::string render_result_text(const InferenceResult& result);
std::string render_examples_text(const std::vector<ReferenceExample>& examples);
std::string render_summary_text(const SweepSummary& summary);

// {"summary": ..., "rows": [...]} streamed without building one giant value.
void write_sweep_json(std::ostream& os, const SweepResult& result);

}  // namespace dualtv
