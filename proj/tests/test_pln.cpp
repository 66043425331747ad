#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dualtv/nars.hpp"
#include "dualtv/pln.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace dualtv;
using testutil::near;

namespace {

// Mirrors the implementation's evaluation order so clamp expectations and
// chaining comparisons are bit-exact.
double independence_raw(double s_ab, double s_bc, double s_b, double s_c) {
    return s_ab * s_bc + (1.0 - s_ab) * (s_c - s_b * s_bc) / (1.0 - s_b);
}

}  // namespace

TEST_CASE("bayes_invert fixtures") {
    const ClampedValue r = pln::bayes_invert(0.6, 0.2, 0.3);
    CHECK(near(r.value, 0.4, 1e-12));
    CHECK_FALSE(r.clamped);

    const ClampedValue clamped = pln::bayes_invert(0.9, 0.8, 0.3);  // raw 2.4
    CHECK(clamped.value == 1.0);
    CHECK(clamped.clamped);
}

TEST_CASE("bayes_invert with equal term probabilities is the identity") {
    auto gen = testutil::rng(20);
    for (int i = 0; i < 20000; ++i) {
        const double p = testutil::in_range(gen, 1e-6, 1.0);
        const ClampedValue r = pln::bayes_invert(0.6, p, p);
        REQUIRE(near(r.value, 0.6, 1e-12));
        REQUIRE_FALSE(r.clamped);
    }
}

TEST_CASE("bayes_invert validates domain and singularity") {
    CHECK_THROWS_AS(pln::bayes_invert(0.5, 0.5, 0.0), SingularityError);
    CHECK_THROWS_AS(pln::bayes_invert(1.2, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(pln::bayes_invert(0.5, -0.1, 0.5), DomainError);
    CHECK_THROWS_AS(pln::bayes_invert(0.5, 0.5, 1.5), DomainError);
}

TEST_CASE("bayes_invert round-trips when neither call clamps") {
    auto gen = testutil::rng(21);
    for (int i = 0; i < 20000; ++i) {
        const double s = testutil::unit(gen);
        const double s_b = testutil::in_range(gen, 1e-3, 1.0);
        const double s_a = testutil::in_range(gen, 1e-3, 1.0);
        const ClampedValue first = pln::bayes_invert(s, s_b, s_a);
        if (first.clamped) continue;
        const ClampedValue second = pln::bayes_invert(first.value, s_a, s_b);
        if (second.clamped) continue;
        REQUIRE(near(second.value, s, 1e-12));
    }
}

TEST_CASE("deduction_independence worked fixture ignores s_a") {
    const TruthValue ab{0.6, 0.8};
    const TruthValue bc{0.7, 0.9};
    for (double s_a : {0.1, 0.5, 0.9}) {
        const InferenceResult r =
            pln::deduction_independence(ab, bc, TermProbabilities{s_a, 0.5, 0.6});
        CHECK(near(r.truth.value, 0.62, 1e-12));
        CHECK(near(r.truth.confidence, 0.72, 1e-12));
        CHECK(near(r.power, 0.62 * 0.72, 1e-12));
        CHECK_FALSE(r.clamped);
    }
}

TEST_CASE("deduction_independence algebraic identities") {
    auto gen = testutil::rng(22);
    for (int i = 0; i < 20000; ++i) {
        const double s_bc = testutil::unit(gen);
        const double s_b = testutil::in_range(gen, 0.0, 0.99);
        const double s_c = testutil::unit(gen);
        const double c1 = testutil::unit(gen);
        const double c2 = testutil::unit(gen);

        // s_ab = 1 leaves exactly the second premise strength.
        const InferenceResult pass_through = pln::deduction_independence(
            TruthValue{1.0, c1}, TruthValue{s_bc, c2}, TermProbabilities{0.5, s_b, s_c});
        REQUIRE(pass_through.truth.value == s_bc);

        // s_c = s_b*s_bc cancels the correction term entirely.
        const double s_ab = testutil::unit(gen);
        const InferenceResult cancelled = pln::deduction_independence(
            TruthValue{s_ab, c1}, TruthValue{s_bc, c2},
            TermProbabilities{0.5, s_b, s_b * s_bc});
        REQUIRE(cancelled.truth.value == s_ab * s_bc);
        REQUIRE_FALSE(cancelled.clamped);
    }
}

TEST_CASE("deduction_independence rejects s_b = 1") {
    CHECK_THROWS_AS(pln::deduction_independence(TruthValue{0.5, 0.5}, TruthValue{0.5, 0.5},
                                                TermProbabilities{0.5, 1.0, 0.5}),
                    SingularityError);
}

TEST_CASE("deduction_independence clamps out-of-range strengths and flags them") {
    // Raw -1: 0 + 1*(0 - 0.5)/0.5
    const InferenceResult low = pln::deduction_independence(
        TruthValue{0.0, 0.8}, TruthValue{1.0, 0.9}, TermProbabilities{0.5, 0.5, 0.0});
    CHECK(low.truth.value == 0.0);
    CHECK(low.clamped);

    // Raw 5: 0 + 0.5*(1 - 0)/0.1
    const InferenceResult high = pln::deduction_independence(
        TruthValue{0.5, 0.8}, TruthValue{0.0, 0.9}, TermProbabilities{0.5, 0.9, 1.0});
    CHECK(high.truth.value == 1.0);
    CHECK(high.clamped);
    CHECK(near(high.truth.confidence, 0.72, 1e-12));
}

TEST_CASE("deduction_geometry reproduces the worked example in simplified mode") {
    const InferenceResult r = pln::deduction_geometry(
        TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9}, pln::GeometryMode::PaperSimplified);
    CHECK(near(r.truth.value, 0.3231, 5e-4));
    CHECK(near(r.power, 0.2323, 5e-4));
    CHECK(near(r.truth.confidence, 0.72, 1e-12));
}

TEST_CASE("deduction_geometry exact mode applies the min clamp") {
    const InferenceResult r = pln::deduction_geometry(
        TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9}, pln::GeometryMode::Exact);
    CHECK(near(r.truth.value, 0.42, 1e-12));  // min(1, 1.3) = 1
}

TEST_CASE("deduction_geometry modes agree when the strengths sum below one") {
    const InferenceResult exact = pln::deduction_geometry(
        TruthValue{0.3, 1.0}, TruthValue{0.4, 1.0}, pln::GeometryMode::Exact);
    const InferenceResult simplified = pln::deduction_geometry(
        TruthValue{0.3, 1.0}, TruthValue{0.4, 1.0}, pln::GeometryMode::PaperSimplified);
    CHECK(near(exact.truth.value, 0.12 / 0.7, 1e-12));
    CHECK(exact.truth.value == simplified.truth.value);
}

TEST_CASE("deduction_geometry degenerate and singular corners") {
    const InferenceResult degenerate = pln::deduction_geometry(
        TruthValue{0.0, 0.8}, TruthValue{0.0, 0.9}, pln::GeometryMode::Exact);
    CHECK(degenerate.truth.value == 0.0);
    CHECK(degenerate.degenerate);
    CHECK(near(degenerate.truth.confidence, 0.72, 1e-12));

    CHECK_THROWS_AS(pln::deduction_geometry(TruthValue{0.0, 0.8}, TruthValue{0.0, 0.9},
                                            pln::GeometryMode::PaperSimplified),
                    SingularityError);
}

TEST_CASE("simplified geometry strength never exceeds exact geometry strength") {
    auto gen = testutil::rng(23);
    for (int i = 0; i < 20000; ++i) {
        const double s1 = testutil::in_range(gen, 1e-9, 1.0);
        const double s2 = testutil::in_range(gen, 1e-9, 1.0);
        const TruthValue a{s1, 1.0};
        const TruthValue b{s2, 1.0};
        const double exact =
            pln::deduction_geometry(a, b, pln::GeometryMode::Exact).truth.value;
        const double simplified =
            pln::deduction_geometry(a, b, pln::GeometryMode::PaperSimplified).truth.value;
        REQUIRE(simplified <= exact);
        if (s1 + s2 <= 1.0) {
            REQUIRE(simplified == exact);
        } else {
            REQUIRE(simplified < exact);
        }
        // On the min-clamped half-space exact geometry is the plain product.
        if (s1 + s2 >= 1.0) {
            REQUIRE(exact == s1 * s2);
        }
    }
}

TEST_CASE("deduction_simplified fixtures") {
    const InferenceResult r = pln::deduction_simplified(TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9});
    CHECK(near(r.truth.value, 0.42, 1e-12));
    CHECK(near(r.truth.confidence, 0.72, 1e-12));
    CHECK(near(r.power, 0.3024, 5e-4));

    const InferenceResult identity = pln::deduction_simplified(TruthValue{1.0, 1.0}, TruthValue{0.37, 0.61});
    CHECK(identity.truth.value == 0.37);
    CHECK(identity.truth.confidence == 0.61);

    CHECK(near(pln::deduction_simplified(TruthValue{0.5, 0.5}, TruthValue{0.5, 0.5}).power,
               0.0625, 1e-12));
}

TEST_CASE("simplified deduction power equals the NARS deduction power") {
    auto gen = testutil::rng(24);
    for (int i = 0; i < 100000; ++i) {
        const TruthValue a{testutil::unit(gen), testutil::unit(gen)};
        const TruthValue b{testutil::unit(gen), testutil::unit(gen)};
        REQUIRE(near(pln::deduction_simplified(a, b).power, nars::deduction(a, b).power,
                     1e-12));
    }
}

TEST_CASE("induction_full worked fixture") {
    const InferenceResult r = pln::induction_full(
        TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9}, TermProbabilities{0.4, 0.4, 0.6});
    CHECK(near(r.truth.value, 19.0 / 30.0, 1e-12));  // 0.42 + 0.4*0.32/0.6
    CHECK(near(r.truth.confidence, 0.72, 1e-12));
    CHECK_FALSE(r.clamped);
}

TEST_CASE("induction_full ratio-one cancellation fixture") {
    auto gen = testutil::rng(25);
    for (int i = 0; i < 20000; ++i) {
        const double s_ba = testutil::unit(gen);
        const double s_bc = testutil::unit(gen);
        const double s_ab_eq = testutil::in_range(gen, 0.01, 0.99);
        // s_a = s_b and s_c = s_b*s_bc: both correction factors vanish.
        const InferenceResult r =
            pln::induction_full(TruthValue{s_ba, 0.8}, TruthValue{s_bc, 0.9},
                                TermProbabilities{s_ab_eq, s_ab_eq, s_ab_eq * s_bc});
        REQUIRE(near(r.truth.value, s_ba * s_bc, 1e-12));
    }
}

TEST_CASE("induction_full singularities") {
    const TruthValue tv{0.5, 0.5};
    CHECK_THROWS_AS(pln::induction_full(tv, tv, TermProbabilities{0.0, 0.5, 0.5}),
                    SingularityError);
    CHECK_THROWS_AS(pln::induction_full(tv, tv, TermProbabilities{0.5, 1.0, 0.5}),
                    SingularityError);
}

TEST_CASE("induction_full clamps blow-ups from the inverted strength") {
    // inverted = 1*0.9/0.1 = 9, raw = 9 + (-8)(0 - 0.9)/0.1 = 81.
    const InferenceResult r = pln::induction_full(
        TruthValue{1.0, 0.8}, TruthValue{1.0, 0.9}, TermProbabilities{0.1, 0.9, 0.0});
    CHECK(r.truth.value == 1.0);
    CHECK(r.clamped);
}

TEST_CASE("induction_full equals bayes inversion chained into deduction when nothing clamps") {
    auto gen = testutil::rng(26);
    int compared = 0;
    while (compared < 20000) {
        const double s_ba = testutil::unit(gen);
        const double s_bc = testutil::unit(gen);
        const double s_a = testutil::in_range(gen, 0.05, 1.0);
        const double s_b = testutil::in_range(gen, 0.0, 0.95);
        const double s_c = testutil::unit(gen);
        const double inverted = s_ba * s_b / s_a;
        if (inverted < 0.0 || inverted > 1.0) continue;
        const double raw = independence_raw(inverted, s_bc, s_b, s_c);
        if (raw < 0.0 || raw > 1.0) continue;
        ++compared;

        const TermProbabilities terms{s_a, s_b, s_c};
        const TruthValue ba{s_ba, 0.8};
        const TruthValue bc{s_bc, 0.9};
        const InferenceResult single = pln::induction_full(ba, bc, terms);
        const ClampedValue inv = pln::bayes_invert(s_ba, s_b, s_a);
        REQUIRE_FALSE(inv.clamped);
        const InferenceResult chained =
            pln::deduction_independence(TruthValue{inv.value, 0.8}, bc, terms);
        REQUIRE(single.truth.value == chained.truth.value);
        REQUIRE(single.truth.confidence == chained.truth.confidence);
        REQUIRE(single.power == chained.power);
    }
}

TEST_CASE("abduction_full worked fixture ignores s_a") {
    for (double s_a : {0.2, 0.7}) {
        const InferenceResult r = pln::abduction_full(
            TruthValue{0.5, 0.7}, TruthValue{0.4, 0.6}, TermProbabilities{s_a, 0.5, 0.5});
        CHECK(near(r.truth.value, 0.5, 1e-12));
        CHECK(near(r.truth.confidence, 0.42, 1e-12));
        CHECK_FALSE(r.clamped);
    }
}

TEST_CASE("abduction_full inversion is the identity when s_c equals s_b") {
    auto gen = testutil::rng(27);
    for (int i = 0; i < 10000; ++i) {
        const double s_cb = testutil::unit(gen);
        const double s_b = testutil::in_range(gen, 0.05, 0.95);
        // With s_c = s_b the chained premise keeps s_cb; compare against
        // feeding s_cb into the deduction directly.
        const TermProbabilities terms{0.5, s_b, s_b};
        const InferenceResult via_abduction =
            pln::abduction_full(TruthValue{0.6, 0.7}, TruthValue{s_cb, 0.8}, terms);
        const InferenceResult direct = pln::deduction_independence(
            TruthValue{0.6, 0.7}, TruthValue{pln::bayes_invert(s_cb, s_b, s_b).value, 0.8},
            terms);
        REQUIRE(via_abduction.truth.value == direct.truth.value);
        REQUIRE(near(pln::bayes_invert(s_cb, s_b, s_b).value, s_cb, 1e-12));
    }
}

TEST_CASE("abduction_full singularities") {
    const TruthValue tv{0.5, 0.5};
    CHECK_THROWS_AS(pln::abduction_full(tv, tv, TermProbabilities{0.5, 0.0, 0.5}),
                    SingularityError);
    CHECK_THROWS_AS(pln::abduction_full(tv, tv, TermProbabilities{0.5, 1.0, 0.5}),
                    SingularityError);
}

TEST_CASE("abduction_full ORs clamp flags across stages") {
    // Inversion raw = 0.9*0.8/0.3 = 2.4 clamps to 1; the deduction stage then
    // passes 1*s_bc through without its own clamp.
    const InferenceResult r = pln::abduction_full(
        TruthValue{1.0, 0.7}, TruthValue{0.9, 0.6}, TermProbabilities{0.5, 0.3, 0.8});
    CHECK(r.clamped);
    CHECK(near(r.truth.value, 1.0, 1e-12));

    // No clamp anywhere.
    const InferenceResult clean = pln::abduction_full(
        TruthValue{0.5, 0.7}, TruthValue{0.4, 0.6}, TermProbabilities{0.5, 0.5, 0.5});
    CHECK_FALSE(clean.clamped);
}

TEST_CASE("abduction_full matches the manual two-stage chain") {
    auto gen = testutil::rng(28);
    for (int i = 0; i < 20000; ++i) {
        const TruthValue ab{testutil::unit(gen), testutil::unit(gen)};
        const TruthValue cb{testutil::unit(gen), testutil::unit(gen)};
        const double s_a = testutil::unit(gen);
        const double s_b = testutil::in_range(gen, 0.01, 0.99);
        const double s_c = testutil::unit(gen);
        const TermProbabilities terms{s_a, s_b, s_c};
        const InferenceResult whole = pln::abduction_full(ab, cb, terms);
        const ClampedValue inv = pln::bayes_invert(cb.value, s_c, s_b);
        InferenceResult manual =
            pln::deduction_independence(ab, TruthValue{inv.value, cb.confidence}, terms);
        manual.clamped = manual.clamped || inv.clamped;
        REQUIRE(whole.truth.value == manual.truth.value);
        REQUIRE(whole.truth.confidence == manual.truth.confidence);
        REQUIRE(whole.clamped == manual.clamped);
    }
}

TEST_CASE("induction_simplified and abduction_simplified fixtures") {
    const InferenceResult ind =
        pln::induction_simplified(TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9});
    CHECK(near(ind.truth.value, 0.42, 1e-12));
    CHECK(near(ind.truth.confidence, 0.72, 1e-12));
    CHECK(near(ind.power, 0.3024, 5e-4));

    CHECK(pln::induction_simplified(TruthValue{0.0, 0.9}, TruthValue{0.7, 0.9}).power == 0.0);
    CHECK(near(pln::induction_simplified(TruthValue{0.9, 0.1}, TruthValue{0.9, 0.1}).power,
               0.0081, 1e-12));

    const InferenceResult abd =
        pln::abduction_simplified(TruthValue{0.5, 0.7}, TruthValue{0.4, 0.6});
    CHECK(near(abd.truth.value, 0.2, 1e-12));
    CHECK(near(abd.truth.confidence, 0.42, 1e-12));
    CHECK(near(abd.power, 0.084, 1e-12));

    CHECK(pln::abduction_simplified(TruthValue{1.0, 1.0}, TruthValue{1.0, 1.0}).power == 1.0);
    CHECK(near(pln::abduction_simplified(TruthValue{0.6, 0.8}, TruthValue{0.7, 0.9}).power,
               0.3024, 5e-4));
}

TEST_CASE("simplified variants are symmetric at the power level") {
    auto gen = testutil::rng(29);
    for (int i = 0; i < 20000; ++i) {
        const TruthValue a{testutil::unit(gen), testutil::unit(gen)};
        const TruthValue b{testutil::unit(gen), testutil::unit(gen)};
        REQUIRE(pln::deduction_simplified(a, b).power == pln::deduction_simplified(b, a).power);
        REQUIRE(pln::induction_simplified(a, b).power == pln::induction_simplified(b, a).power);
        REQUIRE(pln::abduction_simplified(a, b).power == pln::abduction_simplified(b, a).power);
    }
}

TEST_CASE("clamped flag is set exactly when the raw strength leaves the unit interval") {
    auto gen = testutil::rng(30);
    for (int i = 0; i < 30000; ++i) {
        const TruthValue p1{testutil::unit(gen), testutil::unit(gen)};
        const TruthValue p2{testutil::unit(gen), testutil::unit(gen)};
        const double s_a = testutil::in_range(gen, 0.01, 1.0);
        const double s_b = testutil::in_range(gen, 0.01, 0.99);
        const double s_c = testutil::unit(gen);
        const TermProbabilities terms{s_a, s_b, s_c};

        const double ded_raw = independence_raw(p1.value, p2.value, s_b, s_c);
        const InferenceResult ded = pln::deduction_independence(p1, p2, terms);
        REQUIRE(ded.clamped == (ded_raw < 0.0 || ded_raw > 1.0));

        const double inv_raw = p1.value * s_b / s_a;
        const double ind_raw = independence_raw(inv_raw, p2.value, s_b, s_c);
        const InferenceResult ind = pln::induction_full(p1, p2, terms);
        REQUIRE(ind.clamped == (ind_raw < 0.0 || ind_raw > 1.0));

        const double abd_inv_raw = p2.value * s_c / s_b;
        const double abd_inv = clamp_unit(abd_inv_raw).value;
        const double abd_raw = independence_raw(p1.value, abd_inv, s_b, s_c);
        const InferenceResult abd = pln::abduction_full(p1, p2, terms);
        REQUIRE(abd.clamped == (abd_inv_raw < 0.0 || abd_inv_raw > 1.0 || abd_raw < 0.0 ||
                                abd_raw > 1.0));

        for (const InferenceResult& r : {ded, ind, abd}) {
            REQUIRE(r.truth.value >= 0.0);
            REQUIRE(r.truth.value <= 1.0);
            REQUIRE(r.power >= 0.0);
            REQUIRE(r.power <= 1.0);
        }
    }
}
