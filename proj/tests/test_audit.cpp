#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/generators.hpp"
#include "twofold/audit.hpp"
#include "twofold/errors.hpp"

using namespace twofold;

namespace {

Prior prior(std::initializer_list<const char*> coords) {
    RatVec v;
    for (const char* c : coords) v.push_back(parse_rational(c));
    return Prior(std::move(v));
}

UtilityVector act(std::initializer_list<const char*> coords) {
    RatVec v;
    for (const char* c : coords) v.push_back(parse_rational(c));
    return UtilityVector(std::move(v));
}

CredalSet fig1_set() { return CredalSet({prior({"1/3", "2/3"}), prior({"1/2", "1/2"})}); }
TfcPreference fig1_pref() { return TfcPreference({}, fig1_set(), fig1_set()); }
CredalSet center_set() { return CredalSet::singleton(prior({"1/2", "1/2"})); }

bool witnesses_equal(const Witness& a, const Witness& b) {
    return a.acts == b.acts && a.constants == b.constants && a.weights == b.weights &&
           a.tag == b.tag;
}

}  // namespace

TEST_CASE("axiom id round trip") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11",
                             "A12", "A13"})
        CHECK(std::string(to_string(parse_axiom_id(name))) == name);
    CHECK_THROWS_AS(parse_axiom_id("A14"), InvalidArgumentError);
}

TEST_CASE("representation axioms pass on the reference preference") {
    PreferenceView view{fig1_pref()};
    for (AxiomId axiom : {AxiomId::A1_Order, AxiomId::A2_Archimedean,
                          AxiomId::A3_CertaintyIndependence, AxiomId::A4_Convexity,
                          AxiomId::A5_IntervalOrder, AxiomId::A6_EqualUtilityMonotonicity,
                          AxiomId::A7_SandwichMonotonicity}) {
        AuditReport report = audit_axiom(view, axiom, 1000, 7);
        CHECK(report.pass());
        CHECK(report.samples >= 1000);
    }
}

TEST_CASE("monotonicity fails on the reference preference with the epsilon witness") {
    PreferenceView view{fig1_pref()};
    AuditReport report = audit_axiom(view, AxiomId::A8_Monotonicity, 50, 0);
    REQUIRE_FALSE(report.pass());
    const Witness& w = report.violations.front();
    CHECK(w.acts[0] == act({"13/3", "1/3"}));
    CHECK(w.acts[1] == act({"4", "0"}));
    CHECK(replay_witness(view, AxiomId::A8_Monotonicity, w));
}

TEST_CASE("independence fails on the reference preference") {
    PreferenceView view{fig1_pref()};
    AuditReport report = audit_axiom(view, AxiomId::A9_Independence, 50, 0);
    REQUIRE_FALSE(report.pass());
    CHECK(replay_witness(view, AxiomId::A9_Independence, report.violations.front()));
}

TEST_CASE("expected utility passes monotonicity and independence") {
    PreferenceView view{SeuPreference({}, prior({"1/2", "1/2"}))};
    CHECK(audit_axiom(view, AxiomId::A8_Monotonicity, 800, 3).pass());
    CHECK(audit_axiom(view, AxiomId::A9_Independence, 800, 3).pass());
}

TEST_CASE("paired axioms are routed to verify_extension") {
    PreferenceView view{fig1_pref()};
    CHECK_THROWS_AS(audit_axiom(view, AxiomId::A12_Consistency, 10, 0), UnsupportedAxiomError);
    CHECK_THROWS_AS(audit_axiom(view, AxiomId::A13_Caution, 10, 0), UnsupportedAxiomError);
}

TEST_CASE("audits are deterministic in the seed") {
    PreferenceView view{fig1_pref()};
    AuditReport a = audit_axiom(view, AxiomId::A8_Monotonicity, 200, 42);
    AuditReport b = audit_axiom(view, AxiomId::A8_Monotonicity, 200, 42);
    REQUIRE(a.violations.size() == b.violations.size());
    for (size_t i = 0; i < a.violations.size(); ++i)
        CHECK(witnesses_equal(a.violations[i], b.violations[i]));
    CHECK(a.samples == b.samples);
}

TEST_CASE("collapse check") {
    CollapseReport singleton = seu_collapse_check(TfcPreference({}, center_set(), center_set()));
    CHECK(singleton.is_seu);
    CHECK_FALSE(singleton.witness.has_value());

    CollapseReport fig1 = seu_collapse_check(fig1_pref());
    CHECK_FALSE(fig1.is_seu);
    REQUIRE(fig1.witness.has_value());
    CHECK(fig1.witness->acts[0] == act({"13/3", "1/3"}));
    CHECK(fig1.witness->acts[1] == act({"4", "0"}));
    CHECK(fig1.witness->weights[0] == Rat(1, 3));

    // Disjoint singletons cannot even be constructed.
    CHECK_THROWS_AS(TfcPreference({}, center_set(),
                                  CredalSet::singleton(prior({"1/3", "2/3"}))),
                    DisjointPriorSetsError);
    CollapseReport mixed = seu_collapse_check(TfcPreference({}, fig1_set(), center_set()));
    CHECK_FALSE(mixed.is_seu);
}

TEST_CASE("conservatism order examples") {
    TfcPreference tfc = fig1_pref();

    ConservatismReport inside = verify_conservatism_order(
        tfc, BewleyPreference({}, CredalSet::singleton(prior({"2/5", "3/5"}))), 200, 1);
    CHECK(inside.inclusion);
    CHECK(inside.behavioral_pass);

    ConservatismReport outside = verify_conservatism_order(
        tfc, BewleyPreference({}, CredalSet::singleton(prior({"2/3", "1/3"}))), 200, 1);
    CHECK_FALSE(outside.inclusion);
    CHECK_FALSE(outside.behavioral_pass);
    REQUIRE(outside.witness.has_value());
    // The separation-built witness: act (-1, 1) against a constant in the gap.
    CHECK(outside.witness->acts[0] == act({"-1", "1"}));
    CHECK(outside.witness->constants[0] == Rat(-1, 6));

    ConservatismReport same = verify_conservatism_order(
        tfc, BewleyPreference({}, fig1_set()), 200, 1);
    CHECK(same.inclusion);

    CHECK_THROWS_AS(
        verify_conservatism_order(tfc,
                                  BewleyPreference(make_normalization(Rat(2), Rat(0)), fig1_set()),
                                  10, 0),
        NormalizationMismatchError);
}

TEST_CASE("extension examples") {
    TfcPreference tfc = fig1_pref();

    ExtensionReport same = verify_extension(tfc, MaxminPreference({}, fig1_set()), 300, 2);
    CHECK(same.holds);
    CHECK(same.consistency_pass);
    CHECK(same.caution_pass);

    ExtensionReport shrunk = verify_extension(tfc, MaxminPreference({}, center_set()), 300, 2);
    CHECK_FALSE(shrunk.holds);
    CHECK_FALSE(shrunk.caution_pass);
    REQUIRE(shrunk.witness.has_value());

    std::vector<Prior> wide = fig1_set().vertices();
    wide.push_back(prior({"1/4", "3/4"}));
    ExtensionReport grown = verify_extension(tfc, MaxminPreference({}, CredalSet(wide)), 300, 2);
    CHECK_FALSE(grown.holds);
    CHECK_FALSE(grown.consistency_pass);
}

TEST_CASE("ambiguity attitudes") {
    AttitudeReport averse = ambiguity_attitude(TfcPreference({}, fig1_set(), center_set()));
    CHECK(averse.averse);
    CHECK_FALSE(averse.loving);

    AttitudeReport both = ambiguity_attitude(fig1_pref());
    CHECK(both.averse);
    CHECK(both.loving);

    AttitudeReport loving = ambiguity_attitude(TfcPreference({}, center_set(), fig1_set()));
    CHECK_FALSE(loving.averse);
    CHECK(loving.loving);
    CHECK_FALSE(loving.caution_audit.pass());
    CHECK(replay_witness(PreferenceView{TfcPreference({}, center_set(), fig1_set())},
                         AxiomId::A10_ComplementaryCaution,
                         loving.caution_audit.violations.front()));
}

TEST_CASE("comparative ambiguity") {
    TfcPreference wide = fig1_pref();
    TfcPreference narrow({}, center_set(), center_set());

    ComparativeAmbiguityReport more = compare_ambiguity(wide, narrow, 200, 5);
    CHECK(more.more_averse);
    CHECK(more.more_loving);

    ComparativeAmbiguityReport self = compare_ambiguity(wide, wide, 200, 5);
    CHECK(self.more_averse);
    CHECK(self.more_loving);

    ComparativeAmbiguityReport less = compare_ambiguity(narrow, wide, 200, 5);
    CHECK_FALSE(less.more_averse);
    REQUIRE(less.aversion_witness.has_value());
    const Witness& w = *less.aversion_witness;
    UtilityVector x = UtilityVector::constant(2, w.constants[0]);
    CHECK(tfc_prefers(narrow, w.acts[0], x));
    CHECK_FALSE(tfc_prefers(wide, w.acts[0], x));

    CHECK_THROWS_AS(
        compare_ambiguity(wide, TfcPreference(make_normalization(Rat(2), Rat(1)), fig1_set(),
                                              fig1_set()),
                          10, 0),
        NormalizationMismatchError);
}

TEST_CASE("axiom guarantees follow the engine geometry") {
    PreferenceView tfc{fig1_pref()};
    CHECK(axiom_guaranteed(tfc, AxiomId::A5_IntervalOrder));
    CHECK_FALSE(axiom_guaranteed(tfc, AxiomId::A8_Monotonicity));
    CHECK(axiom_guaranteed(tfc, AxiomId::A10_ComplementaryCaution));  // symmetric: D inside C

    PreferenceView averse{TfcPreference({}, fig1_set(), center_set())};
    CHECK(axiom_guaranteed(averse, AxiomId::A10_ComplementaryCaution));
    CHECK_FALSE(axiom_guaranteed(averse, AxiomId::A11_ComplementaryLove));

    PreferenceView bewley{BewleyPreference({}, fig1_set())};
    CHECK(axiom_guaranteed(bewley, AxiomId::A8_Monotonicity));
    CHECK_FALSE(axiom_guaranteed(bewley, AxiomId::A5_IntervalOrder));

    PreferenceView maxmin{MaxminPreference({}, fig1_set())};
    CHECK(axiom_guaranteed(maxmin, AxiomId::A5_IntervalOrder));
    CHECK_FALSE(axiom_guaranteed(maxmin, AxiomId::A4_Convexity));
    CHECK_FALSE(axiom_guaranteed(maxmin, AxiomId::A9_Independence));

    PreferenceView seu{SeuPreference({}, prior({"1/2", "1/2"}))};
    for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"})
        CHECK(axiom_guaranteed(seu, parse_axiom_id(id)));
}

TEST_CASE("guaranteed axioms hold for bewley and maxmin engines on samples") {
    GridSampler sampler(61);
    PreferenceView bewley{testgen::random_bewley(sampler, 3)};
    for (AxiomId axiom : {AxiomId::A1_Order, AxiomId::A3_CertaintyIndependence,
                          AxiomId::A4_Convexity, AxiomId::A8_Monotonicity,
                          AxiomId::A9_Independence})
        CHECK(audit_axiom(bewley, axiom, 300, 9).pass());

    PreferenceView maxmin{MaxminPreference({}, testgen::random_credal_set(sampler, 3))};
    for (AxiomId axiom : {AxiomId::A1_Order, AxiomId::A3_CertaintyIndependence,
                          AxiomId::A5_IntervalOrder, AxiomId::A8_Monotonicity,
                          AxiomId::A10_ComplementaryCaution})
        CHECK(audit_axiom(maxmin, axiom, 300, 9).pass());
}
