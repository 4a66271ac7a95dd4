#pragma once

#include "twofold/preferences.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace twofold {

enum class AxiomId {
    A1_Order,
    A2_Archimedean,
    A3_CertaintyIndependence,
    A4_Convexity,
    A5_IntervalOrder,
    A6_EqualUtilityMonotonicity,
    A7_SandwichMonotonicity,
    A8_Monotonicity,
    A9_Independence,
    A10_ComplementaryCaution,
    A11_ComplementaryLove,
    A12_Consistency,
    A13_Caution,
};

const char* to_string(AxiomId id);
/// Parses "A1".."A13" (also accepts the long names printed by to_string).
AxiomId parse_axiom_id(const std::string& text);

/// Concrete data that reproduces one axiom violation when replayed through
/// the engine.
struct Witness {
    std::vector<UtilityVector> acts;
    std::vector<Rat> constants;
    std::vector<Rat> weights;
    std::string tag;
};

struct AuditReport {
    AxiomId axiom;
    long samples = 0;
    std::vector<Witness> violations;
    uint64_t seed = 0;
    bool pass() const { return violations.empty(); }
};

/// Samples act tuples from the grid, instantiates the axiom's hypothesis and
/// checks its conclusion. Deterministic given the seed. Where the engine is a
/// twofold-conservative one whose geometry forces a violation (monotonicity,
/// independence, the complementary-pair axioms), a constructed witness is
/// checked ahead of the random tuples so the verdict matches the geometry.
/// A12/A13 relate two preferences and are routed to verify_extension.
AuditReport audit_axiom(const PreferenceView& pref, AxiomId axiom, long budget, uint64_t seed);

/// Re-runs a recorded violation through the engine; true iff it reproduces.
bool replay_witness(const PreferenceView& pref, AxiomId axiom, const Witness& witness);

/// Whether a pass on the axiom is forced by the engine's geometry (so any
/// reported violation is an implementation defect).
bool axiom_guaranteed(const PreferenceView& pref, AxiomId axiom);

/// Monotonicity/independence collapse: a twofold-conservative preference
/// satisfies either exactly when both prior sets are the same singleton.
/// Otherwise returns a statewise-dominance witness pair (f, f + eps) with
/// eps = half the evaluation spread of a found direction.
struct CollapseReport {
    bool is_seu;
    std::optional<Witness> witness;
};
CollapseReport seu_collapse_check(const TfcPreference& pref, long search_budget = 64);

/// Conservatism comparison against a Bewley preference: the exact verdict
/// subset(C*, C intersect D) must agree with a behavioral search for
/// f >_tfc g with f not >_bewley g; when inclusion fails the separation-built
/// act-vs-constant witness is emitted and checked.
struct ConservatismReport {
    bool inclusion;
    bool behavioral_pass;
    long samples;
    std::optional<Witness> witness;
};
ConservatismReport verify_conservatism_order(const TfcPreference& tfc,
                                             const BewleyPreference& bewley, long budget,
                                             uint64_t seed);

/// Extension to a complete worst-case ranking: holds exactly when the maxmin
/// prior set equals C (normalizations being positive affine transforms). The
/// consistency and caution audits must agree with the exact verdict.
struct ExtensionReport {
    bool holds;
    bool consistency_pass;
    bool caution_pass;
    long samples;
    std::optional<Witness> witness;
};
ExtensionReport verify_extension(const TfcPreference& tfc, const MaxminPreference& maxmin,
                                 long budget, uint64_t seed);

/// Ambiguity attitudes from set inclusion, cross-checked against the
/// complementary-pair audits (A10/A11).
struct AttitudeReport {
    bool averse;  // D inside C
    bool loving;  // C inside D
    AuditReport caution_audit;
    AuditReport love_audit;
};
AttitudeReport ambiguity_attitude(const TfcPreference& pref, long budget = 400,
                                  uint64_t seed = 0);

/// Comparative attitudes between two preferences sharing a normalization,
/// cross-checked behaviorally on act-vs-constant implications.
struct ComparativeAmbiguityReport {
    bool more_averse;  // C2 inside C1
    bool more_loving;  // D2 inside D1
    long samples;
    std::optional<Witness> aversion_witness;
    std::optional<Witness> loving_witness;
};
ComparativeAmbiguityReport compare_ambiguity(const TfcPreference& pref1,
                                             const TfcPreference& pref2, long budget,
                                             uint64_t seed);

// ---------------------------------------------------------------------------
// Choice with a constant status quo.

enum class Chosen { F, G, X };
const char* to_string(Chosen c);

struct MenuRecord {
    UtilityVector f;
    UtilityVector g;
};

/// Observed choices from menus {f, g, x} with a constant status quo x.
struct ChoiceInstance {
    Rat status_quo;
    std::vector<MenuRecord> menus;
    std::vector<Chosen> chosen;
};

/// Fills in choices under the weak-rationalizability contract: the status quo
/// is kept unless some act beats it; an act is picked only if no rival beats
/// that act. When both acts qualify, the first menu element wins (fixed,
/// documented tie policy).
ChoiceInstance induced_choice(const PreferenceView& pref, std::vector<MenuRecord> menus,
                              Rat status_quo);

/// Verifies both defining conditions for every record:
///   chosen x: neither f nor g beats x;
///   chosen f: f beats x and g does not beat f.
/// The definition spells out only the x- and f-cases; the g-case is checked
/// symmetrically (g beats x and f does not beat g).
struct RationalizabilityReport {
    bool ok;
    std::optional<size_t> violation_index;
    std::string detail;
};
RationalizabilityReport check_weak_rationalizable(const ChoiceInstance& instance,
                                                  const PreferenceView& pref);

/// One-record choice instance rationalizable by the given symmetric
/// twofold-conservative preference but by no Bewley preference: the rejected
/// rival g statewise-dominates the chosen f, which unanimity can never allow.
/// Uses the first direction with positive evaluation spread, eps = spread/2,
/// and the largest integer strictly below the chosen act's worst evaluation
/// as status quo. Throws PreferenceIsSeuError when no spread direction exists.
ChoiceInstance construct_tfc_only_witness(const TfcPreference& pref);

/// Symbolic certificate that no Bewley preference weakly rationalizes the
/// instance: some record picks an act over a statewise-dominating rival.
bool bewley_impossible(const ChoiceInstance& instance);

}  // namespace twofold
