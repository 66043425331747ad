#include "dualtv/comparison.hpp"

#include <algorithm>
#include <cmath>

namespace dualtv {

namespace {

constexpr PlnVariant kAllVariants[] = {
    PlnVariant::IndependenceSimplified, PlnVariant::GeometryExact,
    PlnVariant::GeometryPaperSimplified, PlnVariant::IndependenceFull,
    PlnVariant::InductionFull,           PlnVariant::AbductionFull,
};

}  // namespace

std::string_view to_string(RuleKind rule) {
    switch (rule) {
        case RuleKind::Deduction: return "deduction";
        case RuleKind::Induction: return "induction";
        case RuleKind::Abduction: return "abduction";
    }
    throw UsageError("unknown rule kind");
}

std::string_view to_string(PlnVariant variant) {
    switch (variant) {
        case PlnVariant::IndependenceSimplified: return "independence-simplified";
        case PlnVariant::GeometryExact: return "geometry-exact";
        case PlnVariant::GeometryPaperSimplified: return "geometry-paper-simplified";
        case PlnVariant::IndependenceFull: return "independence-full";
        case PlnVariant::InductionFull: return "induction-full";
        case PlnVariant::AbductionFull: return "abduction-full";
    }
    throw UsageError("unknown pln variant");
}

RuleKind parse_rule_kind(std::string_view name) {
    if (name == "deduction") return RuleKind::Deduction;
    if (name == "induction") return RuleKind::Induction;
    if (name == "abduction") return RuleKind::Abduction;
    throw UsageError("unknown rule '" + std::string(name) +
                     "' (expected deduction|induction|abduction)");
}

PlnVariant parse_pln_variant(std::string_view name) {
    for (PlnVariant v : kAllVariants) {
        if (name == to_string(v)) return v;
    }
    throw UsageError("unknown pln variant '" + std::string(name) + "'");
}

std::vector<PlnVariant> parse_pln_variants(std::string_view comma_list) {
    std::vector<PlnVariant> out;
    std::size_t start = 0;
    while (start <= comma_list.size()) {
        const std::size_t comma = comma_list.find(',', start);
        const std::string_view item = comma == std::string_view::npos
                                          ? comma_list.substr(start)
                                          : comma_list.substr(start, comma - start);
        out.push_back(parse_pln_variant(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool variant_valid_for(RuleKind rule, PlnVariant variant) {
    switch (rule) {
        case RuleKind::Deduction:
            return variant == PlnVariant::IndependenceSimplified ||
                   variant == PlnVariant::GeometryExact ||
                   variant == PlnVariant::GeometryPaperSimplified ||
                   variant == PlnVariant::IndependenceFull;
        case RuleKind::Induction:
            return variant == PlnVariant::IndependenceSimplified ||
                   variant == PlnVariant::InductionFull;
        case RuleKind::Abduction:
            return variant == PlnVariant::IndependenceSimplified ||
                   variant == PlnVariant::AbductionFull;
    }
    return false;
}

bool variant_needs_terms(PlnVariant variant) {
    return variant == PlnVariant::IndependenceFull || variant == PlnVariant::InductionFull ||
           variant == PlnVariant::AbductionFull;
}

InferenceResult evaluate_nars(RuleKind rule, const TruthValue& p1, const TruthValue& p2,
                              double k) {
    switch (rule) {
        case RuleKind::Deduction: return nars::deduction(p1, p2);
        case RuleKind::Induction: return nars::induction(p1, p2, k);
        case RuleKind::Abduction: return nars::abduction(p1, p2, k);
    }
    throw UsageError("unknown rule kind");
}

InferenceResult evaluate_pln(RuleKind rule, PlnVariant variant, const TruthValue& p1,
                             const TruthValue& p2,
                             const std::optional<TermProbabilities>& terms) {
    if (!variant_valid_for(rule, variant)) {
        throw UsageError("variant '" + std::string(to_string(variant)) +
                         "' is not defined for rule '" + std::string(to_string(rule)) + "'");
    }
    if (variant_needs_terms(variant) && !terms.has_value()) {
        throw UsageError("variant '" + std::string(to_string(variant)) +
                         "' requires term probabilities");
    }
    switch (variant) {
        case PlnVariant::IndependenceSimplified:
            switch (rule) {
                case RuleKind::Deduction: return pln::deduction_simplified(p1, p2);
                case RuleKind::Induction: return pln::induction_simplified(p1, p2);
                case RuleKind::Abduction: return pln::abduction_simplified(p1, p2);
            }
            break;
        case PlnVariant::GeometryExact:
            return pln::deduction_geometry(p1, p2, pln::GeometryMode::Exact);
        case PlnVariant::GeometryPaperSimplified:
            return pln::deduction_geometry(p1, p2, pln::GeometryMode::PaperSimplified);
        case PlnVariant::IndependenceFull:
            return pln::deduction_independence(p1, p2, *terms);
        case PlnVariant::InductionFull:
            return pln::induction_full(p1, p2, *terms);
        case PlnVariant::AbductionFull:
            return pln::abduction_full(p1, p2, *terms);
    }
    throw UsageError("unknown pln variant");
}

ComparisonRecord compare_point(RuleKind rule, const TruthValue& p1, const TruthValue& p2,
                               double k, const std::vector<PlnVariant>& variants,
                               const std::optional<TermProbabilities>& terms) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw DomainError("compare_point: k must be finite and > 0, got " + std::to_string(k));
    }
    bool any_full = false;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        if (!variant_valid_for(rule, variants[i])) {
            throw UsageError("variant '" + std::string(to_string(variants[i])) +
                             "' is not defined for rule '" + std::string(to_string(rule)) +
                             "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (variants[j] == variants[i]) {
                throw UsageError("variant '" + std::string(to_string(variants[i])) +
                                 "' requested twice");
            }
        }
        any_full = any_full || variant_needs_terms(variants[i]);
    }
    if (any_full && !terms.has_value()) {
        throw UsageError("term probabilities are required by a requested full variant");
    }
    if (!any_full && terms.has_value()) {
        throw UsageError("term probabilities were given but no requested variant consumes them");
    }

    ComparisonRecord rec;
    rec.rule = rule;
    rec.premise1 = p1;
    rec.premise2 = p2;
    rec.k = k;
    rec.terms = terms;
    rec.variants = variants;
    rec.nars = evaluate_nars(rule, p1, p2, k);
    for (PlnVariant v : variants) {
        const InferenceResult r = evaluate_pln(rule, v, p1, p2, terms);
        const double delta = r.power - rec.nars.power;
        rec.pln.emplace(v, r);
        rec.power_delta.emplace(v, delta);
        rec.abs_power_delta.emplace(v, std::fabs(delta));
    }
    return rec;
}

namespace {

double result_field(const InferenceResult& r, std::string_view field, std::string_view key) {
    if (field == "value") return r.truth.value;
    if (field == "confidence") return r.truth.confidence;
    if (field == "power") return r.power;
    throw UsageError("unknown quantity '" + std::string(key) +
                     "' (expected a .value, .confidence or .power suffix)");
}

}  // namespace

double resolve_quantity(const ComparisonRecord& record, std::string_view key) {
    const std::size_t dot = key.find('.');
    if (dot == std::string_view::npos) {
        throw UsageError("unknown quantity '" + std::string(key) + "'");
    }
    const std::string_view head = key.substr(0, dot);
    const std::string_view rest = key.substr(dot + 1);
    if (head == "nars") {
        return result_field(record.nars, rest, key);
    }
    if (head == "pln") {
        const std::size_t dot2 = rest.find('.');
        if (dot2 == std::string_view::npos) {
            throw UsageError("unknown quantity '" + std::string(key) +
                             "' (expected pln.<variant>.<field>)");
        }
        const PlnVariant v = parse_pln_variant(rest.substr(0, dot2));
        const auto it = record.pln.find(v);
        if (it == record.pln.end()) {
            throw UsageError("variant '" + std::string(to_string(v)) +
                             "' was not evaluated for this record");
        }
        return result_field(it->second, rest.substr(dot2 + 1), key);
    }
    if (head == "power_delta" || head == "abs_power_delta") {
        const PlnVariant v = parse_pln_variant(rest);
        const auto& deltas = head == "power_delta" ? record.power_delta : record.abs_power_delta;
        const auto it = deltas.find(v);
        if (it == deltas.end()) {
            throw UsageError("variant '" + std::string(to_string(v)) +
                             "' was not evaluated for this record");
        }
        return it->second;
    }
    throw UsageError("unknown quantity '" + std::string(key) + "'");
}

std::vector<ValueCheck> check_expected(
    const ComparisonRecord& record,
    const std::vector<std::pair<std::string, double>>& expected, double tolerance) {
    std::vector<ValueCheck> checks;
    checks.reserve(expected.size());
    for (const auto& [key, want] : expected) {
        const double got = resolve_quantity(record, key);
        checks.push_back({key, got, want, std::fabs(got - want) <= tolerance});
    }
    return checks;
}

std::vector<ReferenceExample> reference_examples() {
    std::vector<ReferenceExample> out;
    const auto add = [&out](std::string name, RuleKind rule, TruthValue p1, TruthValue p2,
                            std::vector<PlnVariant> variants,
                            std::vector<std::pair<std::string, double>> expected) {
        ReferenceExample ex;
        ex.name = std::move(name);
        ex.record = compare_point(rule, p1, p2, 0.5, variants);
        ex.checks = check_expected(ex.record, expected, kReferenceTolerance);
        ex.all_pass = std::all_of(ex.checks.begin(), ex.checks.end(),
                                  [](const ValueCheck& c) { return c.pass; });
        out.push_back(std::move(ex));
    };

    add("deduction", RuleKind::Deduction, {0.6, 0.8}, {0.7, 0.9},
        {PlnVariant::IndependenceSimplified, PlnVariant::GeometryPaperSimplified},
        {{"nars.value", 0.4773},
         {"nars.confidence", 0.6336},
         {"nars.power", 0.3024},
         {"pln.independence-simplified.value", 0.42},
         {"pln.independence-simplified.confidence", 0.72},
         {"pln.independence-simplified.power", 0.3024},
         {"pln.geometry-paper-simplified.value", 0.3231},
         {"pln.geometry-paper-simplified.power", 0.2323}});

    add("induction", RuleKind::Induction, {0.6, 0.8}, {0.7, 0.9},
        {PlnVariant::IndependenceSimplified},
        {{"nars.value", 0.6},
         {"nars.confidence", 0.5024},
         {"nars.power", 0.3014},
         {"pln.independence-simplified.value", 0.42},
         {"pln.independence-simplified.confidence", 0.72},
         {"pln.independence-simplified.power", 0.3024}});

    add("abduction", RuleKind::Abduction, {0.5, 0.7}, {0.4, 0.6},
        {PlnVariant::IndependenceSimplified},
        {{"nars.value", 0.4},
         {"nars.confidence", 0.2958},
         {"nars.power", 0.1183},
         {"pln.independence-simplified.value", 0.2},
         {"pln.independence-simplified.confidence", 0.42},
         {"pln.independence-simplified.power", 0.084}});

    return out;
}

}  // namespace dualtv
