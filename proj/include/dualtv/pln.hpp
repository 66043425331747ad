#pragma once
// PLN simple-truth-value formulas: Bayes inversion, deduction in three
// flavours (independence-based, concept-geometry, simplified), and the
// full/simplified induction and abduction rules built on them.
//
// Confidence is the product of the premise confidences for every variant;
// that is the only confidence rule the calculus states, and the full-formula
// variants inherit it unchanged. Strengths that leave [0,1] are projected
// back and flagged via InferenceResult::clamped.

#include "dualtv/truth_core.hpp"

namespace dualtv::pln {

// Concept-geometry deduction ships with two denominators:
//   Exact             s_ac = s_ab*s_bc / min(1, s_ab + s_bc)
//   PaperSimplified   s_ac = s_ab*s_bc / (s_ab + s_bc)        (no min clamp)
// The simplified form is only derivable for s_ab + s_bc <= 1 yet is routinely
// applied outside that region, so both are exposed and callers pick.
enum class GeometryMode { Exact, PaperSimplified };

// Inverts an inheritance: s_ab = s_ba * s_b / s_a, projected into [0,1].
// All arguments must be in [0,1]; s_a = 0 is a singularity.
ClampedValue bayes_invert(double s_ba, double s_b, double s_a);

// Independence-based deduction:
//   s_ac = s_ab*s_bc + (1 - s_ab) * (s_c - s_b*s_bc) / (1 - s_b)
// Requires s_b < 1. terms.s_a is not consumed by this formula.
InferenceResult deduction_independence(const TruthValue& ab, const TruthValue& bc,
                                       const TermProbabilities& terms);

// Exact mode resolves the 0/0 at s_ab = s_bc = 0 to strength 0 with the
// degenerate flag; PaperSimplified throws SingularityError there.
InferenceResult deduction_geometry(const TruthValue& ab, const TruthValue& bc,
                                   GeometryMode mode);

// High-term-probability-uncertainty limit: s_ac = s_ab * s_bc.
InferenceResult deduction_simplified(const TruthValue& ab, const TruthValue& bc);

// Bayes inversion of B->A chained into independence deduction, evaluated in
// one pass with a single final projection into [0,1]. Wherever no projection
// fires this agrees bit-for-bit with bayes_invert + deduction_independence.
// Requires s_a > 0 and s_b < 1.
InferenceResult induction_full(const TruthValue& ba, const TruthValue& bc,
                               const TermProbabilities& terms);

InferenceResult induction_simplified(const TruthValue& ba, const TruthValue& bc);

// Inverts C->B into B->C (projection flagged), then runs independence
// deduction; clamp flags from the two stages are OR-ed. Requires 0 < s_b < 1.
InferenceResult abduction_full(const TruthValue& ab, const TruthValue& cb,
                               const TermProbabilities& terms);

InferenceResult abduction_simplified(const TruthValue& ab, const TruthValue& cb);

}  // namespace dualtv::pln
