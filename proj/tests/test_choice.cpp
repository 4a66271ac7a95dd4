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

}  // namespace

TEST_CASE("induced choices on the reference preference") {
    PreferenceView view{fig1_pref()};

    // Neither act beats a constant at 5: the status quo is kept.
    ChoiceInstance keep =
        induced_choice(view, {MenuRecord{act({"1", "3"}), act({"3", "1"})}}, Rat(5));
    CHECK(keep.chosen == std::vector<Chosen>{Chosen::X});

    // (4,0) beats the constant 1 and (0,4) does not beat (4,0).
    ChoiceInstance pick =
        induced_choice(view, {MenuRecord{act({"4", "0"}), act({"0", "4"})}}, Rat(1));
    CHECK(pick.chosen == std::vector<Chosen>{Chosen::F});

    // An act never beats itself, so duplicated menus pick the first element.
    ChoiceInstance dup =
        induced_choice(view, {MenuRecord{act({"4", "0"}), act({"4", "0"})}}, Rat(1));
    CHECK(dup.chosen == std::vector<Chosen>{Chosen::F});

    CHECK_THROWS_AS(induced_choice(view, {}, Rat(0)), InvalidArgumentError);
}

TEST_CASE("induced instances verify against their own engine") {
    GridSampler sampler(71);
    for (int i = 0; i < 20; ++i) {
        PreferenceView view{testgen::random_tfc(sampler, 2 + sampler.next_index(2))};
        std::vector<MenuRecord> menus;
        for (int m = 0; m < 10; ++m)
            menus.push_back(MenuRecord{sampler.act(view.dimension()), sampler.act(view.dimension())});
        ChoiceInstance instance = induced_choice(view, std::move(menus), sampler.constant());
        CHECK(check_weak_rationalizable(instance, view).ok);
    }
}

TEST_CASE("bewley-induced choices verify against the symmetric twofold engine") {
    GridSampler sampler(73);
    for (int i = 0; i < 20; ++i) {
        size_t dim = 2 + sampler.next_index(2);
        BewleyPreference bewley = testgen::random_bewley(sampler, dim);
        TfcPreference tfc({}, bewley.prior_set(), bewley.prior_set());
        std::vector<MenuRecord> menus;
        for (int m = 0; m < 12; ++m)
            menus.push_back(MenuRecord{sampler.act(dim), sampler.act(dim)});
        ChoiceInstance instance =
            induced_choice(PreferenceView{bewley}, std::move(menus), sampler.constant());
        CHECK(check_weak_rationalizable(instance, PreferenceView{tfc}).ok);
    }
}

TEST_CASE("tampered records are rejected with the violating index") {
    PreferenceView view{fig1_pref()};
    ChoiceInstance instance =
        induced_choice(view, {MenuRecord{act({"4", "0"}), act({"0", "4"})},
                              MenuRecord{act({"1", "3"}), act({"3", "1"})}},
                       Rat(1));
    // Flip the second record to f although neither act beats the other here
    // and (1,3) does not beat the constant... it does (min 2 > 1), so force
    // the first record to x instead: f beats x there.
    instance.chosen[0] = Chosen::X;
    RationalizabilityReport report = check_weak_rationalizable(instance, view);
    CHECK_FALSE(report.ok);
    CHECK(report.violation_index == size_t{0});

    ChoiceInstance empty{Rat(0), {}, {}};
    CHECK(check_weak_rationalizable(empty, view).ok);
}

TEST_CASE("constructed witness instance on the reference preference") {
    ChoiceInstance instance = construct_tfc_only_witness(fig1_pref());
    REQUIRE(instance.menus.size() == 1);
    CHECK(instance.menus[0].f == act({"4", "0"}));
    CHECK(instance.menus[0].g == act({"13/3", "1/3"}));
    CHECK(instance.status_quo == Rat(1));
    CHECK(instance.chosen == std::vector<Chosen>{Chosen::F});

    PreferenceView view{fig1_pref()};
    CHECK(check_weak_rationalizable(instance, view).ok);
    CHECK(bewley_impossible(instance));
}

TEST_CASE("witness law on random symmetric preferences") {
    GridSampler sampler(79);
    int built = 0;
    while (built < 25) {
        TfcPreference pref = testgen::random_symmetric_tfc(sampler, 2 + sampler.next_index(3));
        if (pref.lower_set().is_singleton()) continue;
        ++built;
        ChoiceInstance instance = construct_tfc_only_witness(pref);
        const MenuRecord& menu = instance.menus[0];
        UtilityVector x = UtilityVector::constant(pref.dimension(), instance.status_quo);
        CHECK(tfc_prefers(pref, menu.f, x));
        CHECK_FALSE(tfc_prefers(pref, menu.g, menu.f));
        for (size_t i = 0; i < pref.dimension(); ++i) CHECK(menu.g[i] > menu.f[i]);
        CHECK(check_weak_rationalizable(instance, PreferenceView{pref}).ok);
        CHECK(bewley_impossible(instance));
        // Spot-check the symbolic impossibility against concrete engines.
        BewleyPreference concrete({}, testgen::random_credal_set(sampler, pref.dimension()));
        CHECK(bewley_prefers(concrete, menu.g, menu.f));
        CHECK_FALSE(check_weak_rationalizable(instance, PreferenceView{concrete}).ok);
    }
}

TEST_CASE("witness construction rejects degenerate preferences") {
    CredalSet point = CredalSet::singleton(prior({"1/2", "1/2"}));
    CHECK_THROWS_AS(construct_tfc_only_witness(TfcPreference({}, point, point)),
                    PreferenceIsSeuError);
    CHECK_THROWS_AS(construct_tfc_only_witness(TfcPreference({}, fig1_set(), point)),
                    AsymmetricPreferenceError);
}
