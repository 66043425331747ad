#include "dualtv/nars.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dualtv::nars {

namespace {

// The formulas cannot leave [0,1] in exact arithmetic, but a few ulps of
// rounding drift past an endpoint would break the TruthValue bounds.
double snap_unit(double x) { return std::clamp(x, 0.0, 1.0); }

void require_positive_k(double k) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw DomainError("experience parameter k must be finite and > 0, got " +
                          std::to_string(k));
    }
}

}  // namespace

InferenceResult deduction(const TruthValue& ab, const TruthValue& bc) {
    const double f1 = ab.value, c1 = ab.confidence;
    const double f2 = bc.value, c2 = bc.confidence;
    if (f1 == 0.0 && f2 == 0.0) {
        return make_result(TruthValue{0.0, 0.0}, false, true);
    }
    const double extent = f1 + f2 - f1 * f2;
    const double f = snap_unit(f1 * f2 / extent);
    const double c = snap_unit(c1 * c2 * extent);
    return make_result(TruthValue{f, c});
}

InferenceResult induction(const TruthValue& ba, const TruthValue& b, double k) {
    require_positive_k(k);
    const double weight = b.value * b.confidence * ba.confidence;  // f2*c2*c1
    const double c = snap_unit(weight / (weight + k));
    return make_result(TruthValue{ba.value, c});
}

InferenceResult abduction(const TruthValue& ab, const TruthValue& b, double k) {
    require_positive_k(k);
    const double weight = ab.value * ab.confidence * b.confidence;  // f1*c1*c2
    const double c = snap_unit(weight / (weight + k));
    return make_result(TruthValue{b.value, c});
}

}  // namespace dualtv::nars
