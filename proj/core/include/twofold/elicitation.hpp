#pragma once

#include "twofold/credal.hpp"
#include "twofold/preferences.hpp"

#include <functional>
#include <optional>
#include <string>

namespace twofold {

/// Black box answering "is f strictly preferred to g?". Must answer repeated
/// identical queries identically.
using PreferenceOracle = std::function<bool(const UtilityVector&, const UtilityVector&)>;

/// Which support functional a query family pins down: the minimum over C
/// (via "act > constant" answers) or the maximum over D (via "constant > act").
enum class SupportSide { CMin, DMax };

/// Bracket of width <= tolerance around one support value in one direction.
struct SupportSample {
    Functional direction;
    SupportSide side;
    Rat lo;
    Rat hi;
    long queries;
};

/// Outer approximations of the two prior sets, one halfspace per elicited
/// direction, intersected with the simplex. The true sets are contained in
/// the recovered ones by construction.
struct RecoveredSets {
    CredalSet c_outer;
    CredalSet d_outer;
    Rat tolerance;
    std::vector<SupportSample> samples;
    long total_queries;
};

/// Bisection over constant acts. Preconditions: the oracle must accept the
/// direction act against the low constant and reject it against the high one
/// (mirrored for the D side); tolerance > 0. Query count is bounded by
/// ceil(log2(initial width / tolerance)) + 2.
SupportSample elicit_support(const PreferenceOracle& oracle, const Functional& direction,
                             SupportSide side, const Rat& bracket_lo, const Rat& bracket_hi,
                             const Rat& tolerance);

/// Default elicitation direction sets: 32 rational directions around the
/// circle for two states, the 42-point rational icosphere grid for three,
/// signed axes plus all sign vectors beyond that. Always spanning, always
/// including both signed coordinate axes.
std::vector<Functional> default_directions(size_t dimension);

RecoveredSets recover_prior_sets(const PreferenceOracle& oracle,
                                 const std::vector<Functional>& directions, const Rat& tolerance);

/// Convenience overload using default_directions(dimension).
RecoveredSets recover_prior_sets(const PreferenceOracle& oracle, size_t dimension,
                                 const Rat& tolerance);

struct UniquenessReport {
    bool equivalent;
    /// Populated when not equivalent: act-vs-constant comparison the two
    /// representations disagree on, built from a separating functional.
    std::optional<UtilityVector> witness_act;
    std::optional<Rat> witness_threshold;
    std::string detail;
};

/// Representation uniqueness: two bundles describe the same preference iff
/// their prior sets have identical hulls (any two valid normalizations are
/// positive affine transforms of one another). `probe_budget` many sampled
/// act-vs-constant comparisons double-check the verdict behaviorally.
UniquenessReport verify_uniqueness(const TfcPreference& rep1, const TfcPreference& rep2,
                                   long probe_budget);

}  // namespace twofold
