#include "dualtv/pln.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dualtv::pln {

namespace {

void require_unit(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw DomainError(std::string("bayes_invert: '") + name +
                          "' must be finite and in [0,1], got " + std::to_string(v));
    }
}

void require_s_b_below_one(double s_b, const char* who) {
    if (s_b >= 1.0) {
        throw SingularityError(std::string(who) +
                               ": s_b = 1 makes the deduction denominator vanish");
    }
}

// Raw independence-deduction strength. Shared by every rule that chains
// through the deduction so the chaining identity holds bit-for-bit.
double independence_raw(double s_ab, double s_bc, double s_b, double s_c) {
    return s_ab * s_bc + (1.0 - s_ab) * (s_c - s_b * s_bc) / (1.0 - s_b);
}

}  // namespace

ClampedValue bayes_invert(double s_ba, double s_b, double s_a) {
    require_unit(s_ba, "s_ba");
    require_unit(s_b, "s_b");
    require_unit(s_a, "s_a");
    if (s_a == 0.0) {
        throw SingularityError("bayes_invert: s_a = 0, inversion undefined");
    }
    return clamp_unit(s_ba * s_b / s_a);
}

InferenceResult deduction_independence(const TruthValue& ab, const TruthValue& bc,
                                       const TermProbabilities& terms) {
    require_s_b_below_one(terms.s_b, "deduction_independence");
    const ClampedValue s =
        clamp_unit(independence_raw(ab.value, bc.value, terms.s_b, terms.s_c));
    return make_result(TruthValue{s.value, ab.confidence * bc.confidence}, s.clamped);
}

InferenceResult deduction_geometry(const TruthValue& ab, const TruthValue& bc,
                                   GeometryMode mode) {
    const double s1 = ab.value, s2 = bc.value;
    const double confidence = ab.confidence * bc.confidence;
    if (mode == GeometryMode::PaperSimplified) {
        if (s1 + s2 == 0.0) {
            throw SingularityError("deduction_geometry: s_ab + s_bc = 0 in simplified mode");
        }
        // s1*s2/(s1+s2) <= min(s1,s2)/2, so no clamp can ever fire.
        return make_result(TruthValue{s1 * s2 / (s1 + s2), confidence});
    }
    if (s1 == 0.0 && s2 == 0.0) {
        return make_result(TruthValue{0.0, confidence}, false, true);
    }
    return make_result(TruthValue{s1 * s2 / std::min(1.0, s1 + s2), confidence});
}

InferenceResult deduction_simplified(const TruthValue& ab, const TruthValue& bc) {
    return make_result(TruthValue{ab.value * bc.value, ab.confidence * bc.confidence});
}

InferenceResult induction_full(const TruthValue& ba, const TruthValue& bc,
                               const TermProbabilities& terms) {
    if (terms.s_a == 0.0) {
        throw SingularityError("induction_full: s_a = 0, Bayes inversion undefined");
    }
    require_s_b_below_one(terms.s_b, "induction_full");
    const double inverted = ba.value * terms.s_b / terms.s_a;  // un-projected s_ab
    const ClampedValue s =
        clamp_unit(independence_raw(inverted, bc.value, terms.s_b, terms.s_c));
    return make_result(TruthValue{s.value, ba.confidence * bc.confidence}, s.clamped);
}

InferenceResult induction_simplified(const TruthValue& ba, const TruthValue& bc) {
    return make_result(TruthValue{ba.value * bc.value, ba.confidence * bc.confidence});
}

InferenceResult abduction_full(const TruthValue& ab, const TruthValue& cb,
                               const TermProbabilities& terms) {
    if (terms.s_b == 0.0) {
        throw SingularityError("abduction_full: s_b = 0, Bayes inversion undefined");
    }
    require_s_b_below_one(terms.s_b, "abduction_full");
    const ClampedValue inverted = bayes_invert(cb.value, terms.s_c, terms.s_b);  // s_bc
    InferenceResult ded =
        deduction_independence(ab, TruthValue{inverted.value, cb.confidence}, terms);
    ded.clamped = ded.clamped || inverted.clamped;
    return ded;
}

InferenceResult abduction_simplified(const TruthValue& ab, const TruthValue& cb) {
    return make_result(TruthValue{ab.value * cb.value, ab.confidence * cb.confidence});
}

}  // namespace dualtv::pln
