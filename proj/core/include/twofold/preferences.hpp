#pragma once

#include "twofold/credal.hpp"
#include "twofold/rational.hpp"

#include <variant>

namespace twofold {

/// An act reduced to utility space: one rational payoff per state. A constant
/// act is the all-equal vector.
class UtilityVector {
public:
    explicit UtilityVector(RatVec payoffs);
    static UtilityVector constant(size_t dimension, Rat value);

    const RatVec& payoffs() const { return payoffs_; }
    size_t dimension() const { return payoffs_.size(); }
    const Rat& operator[](size_t i) const { return payoffs_[i]; }
    bool is_constant() const;
    /// Only valid on constant vectors.
    const Rat& constant_value() const;

    bool operator==(const UtilityVector&) const = default;

private:
    RatVec payoffs_;
};

/// Affine adapter from raw outcome payoffs to engine utilities:
/// util = scale * payoff + shift, scale > 0. Comparisons are invariant under
/// any such adapter; the struct records the books for uniqueness reporting.
struct UtilityNormalization {
    Rat scale{1};
    Rat shift{0};
    Rat apply(const Rat& payoff) const { return scale * payoff + shift; }
    bool operator==(const UtilityNormalization&) const = default;
};

/// Validates scale > 0.
UtilityNormalization make_normalization(Rat scale, Rat shift);

/// Any two valid normalizations are positive affine transforms of each other;
/// this spells the check out for uniqueness and extension reports.
bool positive_affine_equivalent(const UtilityNormalization& a, const UtilityNormalization& b);

/// [min over C, max over D] of an act's expected utility.
struct EvaluationInterval {
    Rat lo;
    Rat hi;
};

enum class ComparisonResult {
    FirstStrictlyPreferred,
    SecondStrictlyPreferred,
    Incomparable,
    Indifferent,  // only the (complete) maxmin engine reports this
};

const char* to_string(ComparisonResult r);

/// f > g  iff  min over C of E[f] strictly exceeds max over D of E[g].
/// Construction rejects disjoint C and D.
class TfcPreference {
public:
    TfcPreference(UtilityNormalization norm, CredalSet c, CredalSet d);

    const UtilityNormalization& normalization() const { return norm_; }
    const CredalSet& lower_set() const { return c_; }
    const CredalSet& upper_set() const { return d_; }
    bool symmetric() const { return symmetric_; }
    size_t dimension() const { return c_.dimension(); }

private:
    UtilityNormalization norm_;
    CredalSet c_;
    CredalSet d_;
    bool symmetric_;
};

/// f > g  iff  every prior in C ranks f strictly above g (unanimity).
class BewleyPreference {
public:
    BewleyPreference(UtilityNormalization norm, CredalSet c);
    const UtilityNormalization& normalization() const { return norm_; }
    const CredalSet& prior_set() const { return c_; }
    size_t dimension() const { return c_.dimension(); }

private:
    UtilityNormalization norm_;
    CredalSet c_;
};

/// Complete ranking by worst-case expected utility over C.
class MaxminPreference {
public:
    MaxminPreference(UtilityNormalization norm, CredalSet c);
    const UtilityNormalization& normalization() const { return norm_; }
    const CredalSet& prior_set() const { return c_; }
    size_t dimension() const { return c_.dimension(); }

private:
    UtilityNormalization norm_;
    CredalSet c_;
};

/// Strict expectation comparison under a single prior.
class SeuPreference {
public:
    SeuPreference(UtilityNormalization norm, Prior p);
    const UtilityNormalization& normalization() const { return norm_; }
    const Prior& prior() const { return p_; }
    size_t dimension() const { return p_.dimension(); }

private:
    UtilityNormalization norm_;
    Prior p_;
};

EvaluationInterval evaluate_interval(const TfcPreference& pref, const UtilityVector& f);

bool tfc_prefers(const TfcPreference& pref, const UtilityVector& f, const UtilityVector& g);
bool bewley_prefers(const BewleyPreference& pref, const UtilityVector& f, const UtilityVector& g);
/// Weak comparison: min over C of E[f] >= min over C of E[g]. Complete.
bool maxmin_prefers(const MaxminPreference& pref, const UtilityVector& f, const UtilityVector& g);
bool seu_prefers(const SeuPreference& pref, const UtilityVector& f, const UtilityVector& g);

/// The complete, generally intransitive negation: f >' g iff not (g > f).
/// Requires a symmetric preference.
bool justifiable_negation(const TfcPreference& pref, const UtilityVector& f,
                          const UtilityVector& g);

/// Coordinate-wise alpha*f + (1-alpha)*g, alpha in [0,1].
UtilityVector mix(const UtilityVector& f, const UtilityVector& g, const Rat& alpha);

/// Uniform handle over the four engines: strict comparison plus dispatch
/// metadata for auditors and the CLI.
class PreferenceView {
public:
    using Engine = std::variant<TfcPreference, BewleyPreference, MaxminPreference, SeuPreference>;

    explicit PreferenceView(TfcPreference p) : engine_(std::move(p)) {}
    explicit PreferenceView(BewleyPreference p) : engine_(std::move(p)) {}
    explicit PreferenceView(MaxminPreference p) : engine_(std::move(p)) {}
    explicit PreferenceView(SeuPreference p) : engine_(std::move(p)) {}

    size_t dimension() const;
    bool strictly_prefers(const UtilityVector& f, const UtilityVector& g) const;
    ComparisonResult compare(const UtilityVector& f, const UtilityVector& g) const;

    const TfcPreference* as_tfc() const { return std::get_if<TfcPreference>(&engine_); }
    const BewleyPreference* as_bewley() const { return std::get_if<BewleyPreference>(&engine_); }
    const MaxminPreference* as_maxmin() const { return std::get_if<MaxminPreference>(&engine_); }
    const SeuPreference* as_seu() const { return std::get_if<SeuPreference>(&engine_); }
    const char* kind() const;

private:
    Engine engine_;
};

ComparisonResult compare(const PreferenceView& pref, const UtilityVector& f,
                         const UtilityVector& g);

}  // namespace twofold
