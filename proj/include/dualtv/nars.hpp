#pragma once
// NARS first-order truth-value functions: deduction, induction, abduction.
//
// Premises are plain (frequency, confidence) pairs; the statement forms they
// belong to are documented per function but never represented symbolically.

#include "dualtv/truth_core.hpp"

namespace dualtv::nars {

// A->B (f1,c1) and B->C (f2,c2) entail A->C with
//   f = f1*f2 / (f1 + f2 - f1*f2),   c = c1*c2 * (f1 + f2 - f1*f2)
// so the power f*c collapses to f1*f2*c1*c2. The 0/0 frequency at
// f1 = f2 = 0 resolves to 0 along the diagonal limit; such results carry
// degenerate = true and zero confidence.
InferenceResult deduction(const TruthValue& ab, const TruthValue& bc);

// B->A (f1,c1) plus evidence for B (f2,c2) entail A with
//   f = f1,   c = f2*c2*c1 / (f2*c2*c1 + k)
// k > 0 is the experience parameter; throws DomainError otherwise.
InferenceResult induction(const TruthValue& ba, const TruthValue& b, double k);

// A->B (f1,c1) plus evidence for B (f2,c2) entail A with
//   f = f2,   c = f1*c1*c2 / (f1*c1*c2 + k)
InferenceResult abduction(const TruthValue& ab, const TruthValue& b, double k);

}  // namespace dualtv::nars
