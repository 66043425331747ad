#pragma once
// Shared numeric foundation: truth values, evidence counts, term
// probabilities, the unit-interval clamp, and the power metric used by
// both calculi.

#include <stdexcept>

namespace dualtv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside its documented domain (range or finiteness violation).
class DomainError : public Error {
public:
    using Error::Error;
};

// A formula denominator vanished; the operation is undefined at the point.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Caller-facing misuse: incompatible options, malformed configs or files.
class UsageError : public Error {
public:
    using Error::Error;
};

// A (value, confidence) pair. `value` is NARS frequency or PLN strength
// depending on which calculus produced it; both components live in [0,1].
struct TruthValue {
    double value = 0.0;
    double confidence = 0.0;
};

// Validating constructor; throws DomainError naming the offending field.
TruthValue make_truth_value(double value, double confidence);

// value * confidence, the central comparison quantity.
double power(const TruthValue& tv);

// Evidence tally: n observations against experience parameter k.
struct EvidenceCount {
    double n = 0.0;
    double k = 1.0;
};

// n >= 0 and k > 0; throws DomainError otherwise.
EvidenceCount make_evidence_count(double n, double k);

// n / (n + k): below 1, strictly increasing in n, strictly decreasing in k.
double confidence_from_evidence(const EvidenceCount& e);

// Term (marginal) probabilities consumed by the PLN full formulas.
// Constraints like s_b < 1 or s_a > 0 belong to individual formulas and are
// checked at the call site, not here.
struct TermProbabilities {
    double s_a = 0.0;
    double s_b = 0.0;
    double s_c = 0.0;
};

TermProbabilities make_term_probabilities(double s_a, double s_b, double s_c);

struct ClampedValue {
    double value = 0.0;
    bool clamped = false;
};

// Projects x into [0,1]; the flag records whether projection moved it.
// Non-finite input throws DomainError.
ClampedValue clamp_unit(double x);

// Conclusion of one rule application. `power` is stored redundantly for
// reporting and always equals truth.value * truth.confidence.
struct InferenceResult {
    TruthValue truth;
    double power = 0.0;
    bool clamped = false;     // an intermediate strength was projected into [0,1]
    bool degenerate = false;  // a 0/0 form was resolved by its continuous limit
};

InferenceResult make_result(TruthValue truth, bool clamped = false, bool degenerate = false);

}  // namespace dualtv
