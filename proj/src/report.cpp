#include "dualtv/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace dualtv {

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

void write_record_rows_csv(std::ostream& os, const ComparisonRecord& rec) {
    const std::string shared =
        format_double(rec.premise1.value) + ',' + format_double(rec.premise1.confidence) +
        ',' + format_double(rec.premise2.value) + ',' +
        format_double(rec.premise2.confidence) + ',' + format_double(rec.k) + ',';
    std::string terms;
    if (rec.terms.has_value()) {
        terms = format_double(rec.terms->s_a) + ',' + format_double(rec.terms->s_b) + ',' +
                format_double(rec.terms->s_c);
    } else {
        terms = ",,";
    }
    const std::string nars = format_double(rec.nars.truth.value) + ',' +
                             format_double(rec.nars.truth.confidence) + ',' +
                             format_double(rec.nars.power);
    for (PlnVariant v : rec.variants) {
        const InferenceResult& p = rec.pln.at(v);
        os << to_string(rec.rule) << ',' << to_string(v) << ',' << shared << terms << ','
           << format_double(p.truth.value) << ',' << format_double(p.truth.confidence) << ','
           << format_double(p.power) << ',' << nars << ','
           << format_double(rec.power_delta.at(v)) << ','
           << bool_text(p.clamped || rec.nars.clamped) << ','
           << bool_text(p.degenerate || rec.nars.degenerate) << '\n';
    }
}

}  // namespace

void write_records_csv(std::ostream& os, const std::vector<ComparisonRecord>& records) {
    os << kCsvHeader << '\n';
    for (const ComparisonRecord& rec : records) {
        write_record_rows_csv(os, rec);
    }
}

json record_rows_json(const ComparisonRecord& rec) {
    json rows = json::array();
    for (PlnVariant v : rec.variants) {
        const InferenceResult& p = rec.pln.at(v);
        json row;
        row["rule"] = to_string(rec.rule);
        row["variant"] = to_string(v);
        row["f1"] = rec.premise1.value;
        row["c1"] = rec.premise1.confidence;
        row["f2"] = rec.premise2.value;
        row["c2"] = rec.premise2.confidence;
        row["k"] = rec.k;
        row["s_a"] = rec.terms ? json(rec.terms->s_a) : json(nullptr);
        row["s_b"] = rec.terms ? json(rec.terms->s_b) : json(nullptr);
        row["s_c"] = rec.terms ? json(rec.terms->s_c) : json(nullptr);
        row["pln_value"] = p.truth.value;
        row["pln_confidence"] = p.truth.confidence;
        row["pln_power"] = p.power;
        row["nars_value"] = rec.nars.truth.value;
        row["nars_confidence"] = rec.nars.truth.confidence;
        row["nars_power"] = rec.nars.power;
        row["power_delta"] = rec.power_delta.at(v);
        row["clamped"] = p.clamped || rec.nars.clamped;
        row["degenerate"] = p.degenerate || rec.nars.degenerate;
        rows.push_back(std::move(row));
    }
    return rows;
}

json result_to_json(const InferenceResult& result) {
    json j;
    j["value"] = result.truth.value;
    j["confidence"] = result.truth.confidence;
    j["power"] = result.power;
    j["clamped"] = result.clamped;
    j["degenerate"] = result.degenerate;
    return j;
}

json summary_to_json(const SweepSummary& summary) {
    json j;
    j["count"] = summary.count;
    j["skipped"] = summary.skipped;
    json variants;
    for (const auto& [variant, stats] : summary.per_variant) {
        json s;
        s["mean_abs_power_delta"] = stats.mean_abs_power_delta;
        s["max_abs_power_delta"] = stats.max_abs_power_delta;
        json arg;
        arg["f1"] = stats.argmax_point[0];
        arg["c1"] = stats.argmax_point[1];
        arg["f2"] = stats.argmax_point[2];
        arg["c2"] = stats.argmax_point[3];
        s["argmax_point"] = std::move(arg);
        variants[std::string(to_string(variant))] = std::move(s);
    }
    j["variants"] = std::move(variants);
    return j;
}

json examples_to_json(const std::vector<ReferenceExample>& examples) {
    json arr = json::array();
    for (const ReferenceExample& ex : examples) {
        json e;
        e["name"] = ex.name;
        e["premise1"] = {{"value", ex.record.premise1.value},
                         {"confidence", ex.record.premise1.confidence}};
        e["premise2"] = {{"value", ex.record.premise2.value},
                         {"confidence", ex.record.premise2.confidence}};
        e["k"] = ex.record.k;
        json checks = json::array();
        for (const ValueCheck& c : ex.checks) {
            checks.push_back({{"key", c.key},
                              {"computed", c.computed},
                              {"expected", c.expected},
                              {"pass", c.pass}});
        }
        e["checks"] = std::move(checks);
        e["all_pass"] = ex.all_pass;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string render_result_text(const InferenceResult& result) {
    std::string s;
    s += "value: " + format_fixed4(result.truth.value) + "\n";
    s += "confidence: " + format_fixed4(result.truth.confidence) + "\n";
    s += "power: " + format_fixed4(result.power) + "\n";
    s += std::string("clamped: ") + bool_text(result.clamped) + "\n";
    s += std::string("degenerate: ") + bool_text(result.degenerate) + "\n";
    return s;
}

std::string render_examples_text(const std::vector<ReferenceExample>& examples) {
    std::ostringstream os;
    std::size_t total = 0;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        const ReferenceExample& ex = examples[i];
        os << "example " << i + 1 << " (" << ex.name << "): premises ("
           << format_fixed4(ex.record.premise1.value) << ","
           << format_fixed4(ex.record.premise1.confidence) << ") ("
           << format_fixed4(ex.record.premise2.value) << ","
           << format_fixed4(ex.record.premise2.confidence) << ") k="
           << format_fixed4(ex.record.k) << "\n";
        for (const ValueCheck& c : ex.checks) {
            os << "  " << c.key;
            for (std::size_t pad = c.key.size(); pad < 42; ++pad) os << ' ';
            os << " computed " << format_fixed4(c.computed) << "  expected "
               << format_fixed4(c.expected) << "  " << (c.pass ? "pass" : "FAIL") << "\n";
            ++total;
            if (c.pass) ++passed;
        }
    }
    os << passed << "/" << total << " checks passed\n";
    return os.str();
}

std::string render_summary_text(const SweepSummary& summary) {
    std::ostringstream os;
    os << "points: " << summary.count << "\n";
    os << "skipped: " << summary.skipped << "\n";
    for (const auto& [variant, stats] : summary.per_variant) {
        os << "variant " << to_string(variant)
           << ": mean_abs_power_delta=" << format_double(stats.mean_abs_power_delta)
           << " max_abs_power_delta=" << format_double(stats.max_abs_power_delta)
           << " argmax=(f1=" << format_double(stats.argmax_point[0])
           << ", c1=" << format_double(stats.argmax_point[1])
           << ", f2=" << format_double(stats.argmax_point[2])
           << ", c2=" << format_double(stats.argmax_point[3]) << ")\n";
    }
    return os.str();
}

void write_sweep_json(std::ostream& os, const SweepResult& result) {
    os << "{\n\"summary\": " << summary_to_json(result.summary).dump(2) << ",\n\"rows\": [";
    bool first = true;
    for (const ComparisonRecord& rec : result.records) {
        for (const json& row : record_rows_json(rec)) {
            os << (first ? "\n" : ",\n") << row.dump();
            first = false;
        }
    }
    os << "\n]}\n";
}

}  // namespace dualtv
