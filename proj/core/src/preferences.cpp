#include "twofold/preferences.hpp"

#include "twofold/errors.hpp"

namespace twofold {

namespace {

void require_same_dimension(size_t a, size_t b, const char* where) {
    if (a != b) throw DimensionMismatchError(where);
}

Functional as_functional(const UtilityVector& f) { return Functional(f.payoffs()); }

}  // namespace

UtilityVector::UtilityVector(RatVec payoffs) : payoffs_(std::move(payoffs)) {
    if (payoffs_.empty()) throw InvalidArgumentError("empty utility vector");
}

UtilityVector UtilityVector::constant(size_t dimension, Rat value) {
    return UtilityVector(RatVec(dimension, std::move(value)));
}

bool UtilityVector::is_constant() const {
    for (const Rat& p : payoffs_)
        if (p != payoffs_.front()) return false;
    return true;
}

const Rat& UtilityVector::constant_value() const {
    if (!is_constant()) throw InvalidArgumentError("act is not constant");
    return payoffs_.front();
}

UtilityNormalization make_normalization(Rat scale, Rat shift) {
    if (scale <= 0) throw InvalidArgumentError("utility scale must be positive");
    return UtilityNormalization{std::move(scale), std::move(shift)};
}

bool positive_affine_equivalent(const UtilityNormalization& a, const UtilityNormalization& b) {
    // u_b = (b.scale / a.scale) * u_a + (b.shift - b.scale * a.shift / a.scale);
    // the relative scale is positive whenever both adapters are valid.
    return a.scale > 0 && b.scale > 0;
}

const char* to_string(ComparisonResult r) {
    switch (r) {
        case ComparisonResult::FirstStrictlyPreferred: return "FirstStrictlyPreferred";
        case ComparisonResult::SecondStrictlyPreferred: return "SecondStrictlyPreferred";
        case ComparisonResult::Incomparable: return "Incomparable";
        case ComparisonResult::Indifferent: return "Indifferent";
    }
    return "?";
}

TfcPreference::TfcPreference(UtilityNormalization norm, CredalSet c, CredalSet d)
    : norm_(std::move(norm)), c_(std::move(c)), d_(std::move(d)), symmetric_(false) {
    if (norm_.scale <= 0) throw InvalidArgumentError("utility scale must be positive");
    require_same_dimension(c_.dimension(), d_.dimension(), "tfc prior sets");
    if (!intersects(c_, d_))
        throw DisjointPriorSetsError("tfc preference: C and D are disjoint");
    symmetric_ = same_hull(c_, d_);
}

BewleyPreference::BewleyPreference(UtilityNormalization norm, CredalSet c)
    : norm_(std::move(norm)), c_(std::move(c)) {
    if (norm_.scale <= 0) throw InvalidArgumentError("utility scale must be positive");
}

MaxminPreference::MaxminPreference(UtilityNormalization norm, CredalSet c)
    : norm_(std::move(norm)), c_(std::move(c)) {
    if (norm_.scale <= 0) throw InvalidArgumentError("utility scale must be positive");
}

SeuPreference::SeuPreference(UtilityNormalization norm, Prior p)
    : norm_(std::move(norm)), p_(std::move(p)) {
    if (norm_.scale <= 0) throw InvalidArgumentError("utility scale must be positive");
}

EvaluationInterval evaluate_interval(const TfcPreference& pref, const UtilityVector& f) {
    require_same_dimension(pref.dimension(), f.dimension(), "evaluate_interval");
    Functional xi = as_functional(f);
    EvaluationInterval interval{support_min(pref.lower_set(), xi),
                                support_max(pref.upper_set(), xi)};
    if (interval.lo > interval.hi)
        throw PropertyCheckError("evaluation interval inverted despite C meeting D");
    return interval;
}

bool tfc_prefers(const TfcPreference& pref, const UtilityVector& f, const UtilityVector& g) {
    require_same_dimension(pref.dimension(), f.dimension(), "tfc_prefers");
    require_same_dimension(pref.dimension(), g.dimension(), "tfc_prefers");
    return support_min(pref.lower_set(), as_functional(f)) >
           support_max(pref.upper_set(), as_functional(g));
}

bool bewley_prefers(const BewleyPreference& pref, const UtilityVector& f, const UtilityVector& g) {
    require_same_dimension(pref.dimension(), f.dimension(), "bewley_prefers");
    require_same_dimension(pref.dimension(), g.dimension(), "bewley_prefers");
    RatVec diff(f.dimension());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = f[i] - g[i];
    return support_min(pref.prior_set(), Functional(std::move(diff))) > 0;
}

bool maxmin_prefers(const MaxminPreference& pref, const UtilityVector& f, const UtilityVector& g) {
    require_same_dimension(pref.dimension(), f.dimension(), "maxmin_prefers");
    require_same_dimension(pref.dimension(), g.dimension(), "maxmin_prefers");
    return support_min(pref.prior_set(), as_functional(f)) >=
           support_min(pref.prior_set(), as_functional(g));
}

bool seu_prefers(const SeuPreference& pref, const UtilityVector& f, const UtilityVector& g) {
    require_same_dimension(pref.dimension(), f.dimension(), "seu_prefers");
    require_same_dimension(pref.dimension(), g.dimension(), "seu_prefers");
    return dot(pref.prior().mass(), f.payoffs()) > dot(pref.prior().mass(), g.payoffs());
}

bool justifiable_negation(const TfcPreference& pref, const UtilityVector& f,
                          const UtilityVector& g) {
    if (!pref.symmetric()) throw AsymmetricPreferenceError();
    return !tfc_prefers(pref, g, f);
}

UtilityVector mix(const UtilityVector& f, const UtilityVector& g, const Rat& alpha) {
    require_same_dimension(f.dimension(), g.dimension(), "mix");
    if (alpha < 0 || alpha > 1) throw InvalidArgumentError("mixing weight outside [0,1]");
    RatVec out(f.dimension());
    for (size_t i = 0; i < out.size(); ++i) out[i] = alpha * f[i] + (1 - alpha) * g[i];
    return UtilityVector(std::move(out));
}

size_t PreferenceView::dimension() const {
    return std::visit([](const auto& e) { return e.dimension(); }, engine_);
}

bool PreferenceView::strictly_prefers(const UtilityVector& f, const UtilityVector& g) const {
    return std::visit(
        [&](const auto& e) -> bool {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, TfcPreference>) return tfc_prefers(e, f, g);
            if constexpr (std::is_same_v<T, BewleyPreference>) return bewley_prefers(e, f, g);
            if constexpr (std::is_same_v<T, MaxminPreference>)
                return maxmin_prefers(e, f, g) && !maxmin_prefers(e, g, f);
            if constexpr (std::is_same_v<T, SeuPreference>) return seu_prefers(e, f, g);
        },
        engine_);
}

ComparisonResult PreferenceView::compare(const UtilityVector& f, const UtilityVector& g) const {
    bool fg = strictly_prefers(f, g);
    bool gf = strictly_prefers(g, f);
    if (fg) return ComparisonResult::FirstStrictlyPreferred;
    if (gf) return ComparisonResult::SecondStrictlyPreferred;
    // The partial engines never report indifference between distinct acts;
    // only the complete maxmin ranking does.
    if (as_maxmin() != nullptr) return ComparisonResult::Indifferent;
    return ComparisonResult::Incomparable;
}

const char* PreferenceView::kind() const {
    if (as_tfc()) return "tfc";
    if (as_bewley()) return "bewley";
    if (as_maxmin()) return "maxmin";
    return "seu";
}

ComparisonResult compare(const PreferenceView& pref, const UtilityVector& f,
                         const UtilityVector& g) {
    return pref.compare(f, g);
}

}  // namespace twofold
