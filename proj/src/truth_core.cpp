#include "dualtv/truth_core.hpp"

#include <cmath>
#include <string>

namespace dualtv {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

TruthValue make_truth_value(double value, double confidence) {
    if (!std::isfinite(value) || !in_unit(value)) {
        throw DomainError("truth value: field 'value' must be finite and in [0,1], got " +
                          std::to_string(value));
    }
    if (!std::isfinite(confidence) || !in_unit(confidence)) {
        throw DomainError("truth value: field 'confidence' must be finite and in [0,1], got " +
                          std::to_string(confidence));
    }
    return TruthValue{value, confidence};
}

double power(const TruthValue& tv) { return tv.value * tv.confidence; }

EvidenceCount make_evidence_count(double n, double k) {
    if (!std::isfinite(n) || n < 0.0) {
        throw DomainError("evidence count: field 'n' must be finite and >= 0, got " +
                          std::to_string(n));
    }
    if (!std::isfinite(k) || k <= 0.0) {
        throw DomainError("evidence count: field 'k' must be finite and > 0, got " +
                          std::to_string(k));
    }
    return EvidenceCount{n, k};
}

double confidence_from_evidence(const EvidenceCount& e) { return e.n / (e.n + e.k); }

TermProbabilities make_term_probabilities(double s_a, double s_b, double s_c) {
    auto check = [](double v, const char* field) {
        if (!std::isfinite(v) || !in_unit(v)) {
            throw DomainError(std::string("term probabilities: field '") + field +
                              "' must be finite and in [0,1], got " + std::to_string(v));
        }
    };
    check(s_a, "s_a");
    check(s_b, "s_b");
    check(s_c, "s_c");
    return TermProbabilities{s_a, s_b, s_c};
}

ClampedValue clamp_unit(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("clamp_unit: input must be finite");
    }
    if (x < 0.0) return {0.0, true};
    if (x > 1.0) return {1.0, true};
    return {x, false};
}

InferenceResult make_result(TruthValue truth, bool clamped, bool degenerate) {
    InferenceResult r;
    r.truth = truth;
    r.power = truth.value * truth.confidence;
    r.clamped = clamped;
    r.degenerate = degenerate;
    return r;
}

}  // namespace dualtv
