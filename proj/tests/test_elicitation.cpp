#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/generators.hpp"
#include "twofold/elicitation.hpp"
#include "twofold/errors.hpp"

#include <cmath>
#include <set>

using namespace twofold;

namespace {

Prior prior(std::initializer_list<const char*> coords) {
    RatVec v;
    for (const char* c : coords) v.push_back(parse_rational(c));
    return Prior(std::move(v));
}

CredalSet fig1_set() { return CredalSet({prior({"1/3", "2/3"}), prior({"1/2", "1/2"})}); }

TfcPreference fig1_pref() { return TfcPreference({}, fig1_set(), fig1_set()); }

long query_bound(const Rat& width, const Rat& tolerance) {
    long steps = 0;
    Rat w = width;
    while (w > tolerance) {
        w /= 2;
        ++steps;
    }
    return steps + 2;
}

}  // namespace

TEST_CASE("support bisection brackets the frozen values") {
    TfcPreference pref = fig1_pref();
    PreferenceOracle oracle = testgen::tfc_oracle(pref);
    Functional direction({Rat(1), Rat(3)});
    Rat tol(1, 1024);

    SupportSample c_side = elicit_support(oracle, direction, SupportSide::CMin, Rat(0), Rat(4), tol);
    CHECK(c_side.hi - c_side.lo <= tol);
    CHECK(c_side.lo < Rat(2));
    CHECK(Rat(2) <= c_side.hi);
    CHECK(c_side.queries <= query_bound(Rat(4), tol));

    SupportSample d_side = elicit_support(oracle, direction, SupportSide::DMax, Rat(0), Rat(4), tol);
    CHECK(d_side.lo <= Rat(7, 3));
    CHECK(Rat(7, 3) < d_side.hi);
    CHECK(d_side.queries <= query_bound(Rat(4), tol));

    // Constant directions evaluate to their own level.
    Functional ones({Rat(1), Rat(1)});
    SupportSample flat = elicit_support(oracle, ones, SupportSide::CMin, Rat(0), Rat(2), tol);
    CHECK(flat.lo < Rat(1));
    CHECK(Rat(1) <= flat.hi);
}

TEST_CASE("bracket validation") {
    TfcPreference pref = fig1_pref();
    PreferenceOracle oracle = testgen::tfc_oracle(pref);
    Functional direction({Rat(1), Rat(3)});
    // True value 2: a bracket entirely above it fails the precondition.
    CHECK_THROWS_AS(
        elicit_support(oracle, direction, SupportSide::CMin, Rat(3), Rat(4), Rat(1, 64)),
        BracketError);
    CHECK_THROWS_AS(
        elicit_support(oracle, direction, SupportSide::CMin, Rat(2), Rat(1), Rat(1, 64)),
        BracketError);
    CHECK_THROWS_AS(
        elicit_support(oracle, direction, SupportSide::CMin, Rat(0), Rat(4), Rat(0)),
        InvalidArgumentError);
}

TEST_CASE("non-monotone oracles are reported") {
    // Answers true on a detached sliver above the bracket's false region.
    PreferenceOracle broken = [](const UtilityVector& f, const UtilityVector& g) {
        if (!g.is_constant()) return false;
        const Rat& x = g.constant_value();
        return x < Rat(1) || (x > Rat(2) && x < Rat(3));
    };
    Functional direction({Rat(1), Rat(3)});
    bool flagged = false;
    try {
        // Bracket [0, 4]: true at 0, false at 4, but true again at 5/2.
        elicit_support(broken, direction, SupportSide::CMin, Rat(0), Rat(4), Rat(1, 64));
    } catch (const InconsistentOracleError&) {
        flagged = true;
    } catch (const BracketError&) {
        flagged = false;
    }
    CHECK(flagged);
}

TEST_CASE("default directions: counts, axes, span") {
    std::vector<Functional> two = default_directions(2);
    CHECK(two.size() == 32);
    std::vector<Functional> three = default_directions(3);
    CHECK(three.size() == 42);

    for (size_t dim : {size_t{2}, size_t{3}, size_t{4}}) {
        std::vector<Functional> dirs = default_directions(dim);
        for (size_t axis = 0; axis < dim; ++axis) {
            for (int sign : {1, -1}) {
                bool found = false;
                for (const Functional& d : dirs) {
                    bool match = true;
                    for (size_t i = 0; i < dim; ++i) {
                        if (i == axis) match = match && (sign > 0 ? d[i] > 0 : d[i] < 0);
                        else match = match && d[i] == 0;
                    }
                    found = found || match;
                }
                CHECK(found);
            }
        }
    }

    // The three-state grid is closed under negation (both support sides see
    // the same facet normals).
    std::set<RatVec> set3;
    for (const Functional& d : three) set3.insert(d.coefficients());
    for (const Functional& d : three) {
        RatVec neg(d.dimension());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -d[i];
        CHECK(set3.count(neg) == 1);
    }
}

TEST_CASE("recovery on the reference preference is sound and tight") {
    TfcPreference pref = fig1_pref();
    RecoveredSets recovered =
        recover_prior_sets(testgen::tfc_oracle(pref), 2, Rat(1, 4096));
    CHECK(hull_distance(fig1_set(), recovered.c_outer) == 0);
    CHECK(hull_distance(fig1_set(), recovered.d_outer) == 0);
    CHECK(hull_distance(recovered.c_outer, fig1_set()) <= Rat(1, 4096));
    CHECK(hull_distance(recovered.d_outer, fig1_set()) <= Rat(1, 4096));

    long per_direction_bound = query_bound(Rat(2) + 2, Rat(1, 4096));
    CHECK(recovered.total_queries <= 32 * 2 * per_direction_bound);
    for (const SupportSample& s : recovered.samples) CHECK(s.hi - s.lo <= Rat(1, 4096));
}

TEST_CASE("a point preference recovers to a tolerance ball") {
    CredalSet point = CredalSet::singleton(prior({"1/2", "1/2"}));
    TfcPreference pref({}, point, point);
    Rat tol(1, 4096);
    RecoveredSets recovered = recover_prior_sets(testgen::tfc_oracle(pref), 2, tol);
    CHECK(hull_distance(point, recovered.c_outer) == 0);
    CHECK(hull_distance(recovered.c_outer, point) <= tol);
    CHECK(hull_distance(recovered.d_outer, point) <= tol);
}

TEST_CASE("degenerate direction sets are rejected") {
    TfcPreference pref = fig1_pref();
    PreferenceOracle oracle = testgen::tfc_oracle(pref);
    // Missing the negative second axis.
    std::vector<Functional> dirs{Functional({Rat(1), Rat(0)}), Functional({Rat(-1), Rat(0)}),
                                 Functional({Rat(0), Rat(1)})};
    CHECK_THROWS_AS(recover_prior_sets(oracle, dirs, Rat(1, 64)), DegenerateDirectionsError);
    // Spanning failure: every direction proportional to (1, 1).
    std::vector<Functional> flat{Functional({Rat(1), Rat(1)}), Functional({Rat(-1), Rat(-1)})};
    CHECK_THROWS_AS(recover_prior_sets(oracle, flat, Rat(1, 64)), DegenerateDirectionsError);
}

TEST_CASE("halving the tolerance never loosens the recovery") {
    TfcPreference pref = fig1_pref();
    PreferenceOracle oracle = testgen::tfc_oracle(pref);
    RecoveredSets coarse = recover_prior_sets(oracle, 2, Rat(1, 256));
    RecoveredSets fine = recover_prior_sets(oracle, 2, Rat(1, 512));
    CHECK(hull_distance(fine.c_outer, fig1_set()) <= hull_distance(coarse.c_outer, fig1_set()));
    CHECK(hull_distance(fine.d_outer, fig1_set()) <= hull_distance(coarse.d_outer, fig1_set()));
}

TEST_CASE("asymmetric preferences recover both sets") {
    CredalSet c = fig1_set();
    std::vector<Prior> wide = c.vertices();
    wide.push_back(prior({"1/4", "3/4"}));
    CredalSet d(wide);
    TfcPreference pref({}, c, d);
    Rat tol(1, 4096);
    RecoveredSets recovered = recover_prior_sets(testgen::tfc_oracle(pref), 2, tol);
    CHECK(hull_distance(c, recovered.c_outer) == 0);
    CHECK(hull_distance(d, recovered.d_outer) == 0);
    CHECK(hull_distance(recovered.c_outer, c) <= tol);
    CHECK(hull_distance(recovered.d_outer, d) <= tol);
}

TEST_CASE("uniqueness: affine rescaling is equivalent, set changes are not") {
    TfcPreference base = fig1_pref();
    TfcPreference rescaled(make_normalization(Rat(3), Rat(-2)), fig1_set(), fig1_set());
    CHECK(verify_uniqueness(base, rescaled, 50).equivalent);
    CHECK(verify_uniqueness(base, base, 50).equivalent);

    TfcPreference shrunk({}, CredalSet::singleton(prior({"1/2", "1/2"})), fig1_set());
    UniquenessReport report = verify_uniqueness(base, shrunk, 50);
    CHECK_FALSE(report.equivalent);
    REQUIRE(report.witness_act.has_value());
    REQUIRE(report.witness_threshold.has_value());
    UtilityVector x = UtilityVector::constant(2, *report.witness_threshold);
    // The two representations disagree on the witness act-vs-constant query.
    CHECK(tfc_prefers(base, *report.witness_act, x) !=
          tfc_prefers(shrunk, *report.witness_act, x));
}
