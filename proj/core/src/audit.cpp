#include "twofold/audit.hpp"

#include "twofold/errors.hpp"
#include "twofold/sampling.hpp"

#include <algorithm>
#include <optional>

namespace twofold {

namespace {

// ---------------------------------------------------------------------------
// Small shared helpers.

UtilityVector constant_act(size_t dim, const Rat& v) { return UtilityVector::constant(dim, v); }

UtilityVector shift_act(const UtilityVector& f, const Rat& c) {
    RatVec out(f.dimension());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f[i] + c;
    return UtilityVector(std::move(out));
}

UtilityVector negate_act(const UtilityVector& f) {
    RatVec out(f.dimension());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -f[i];
    return UtilityVector(std::move(out));
}

// x0-complement: g with (f + g)/2 = x0 statewise.
UtilityVector complement_act(const UtilityVector& f, const Rat& x0) {
    RatVec out(f.dimension());
    for (size_t i = 0; i < out.size(); ++i) out[i] = 2 * x0 - f[i];
    return UtilityVector(std::move(out));
}

// base + c*1 for the smallest escalation constant that beats `target`.
std::optional<UtilityVector> lift_above(const PreferenceView& view, const UtilityVector& base,
                                        const UtilityVector& target) {
    static const Rat steps[] = {Rat(0),    Rat(1, 4), Rat(1, 2), Rat(1), Rat(2),
                                Rat(4),    Rat(8),    Rat(16),   Rat(32)};
    for (const Rat& c : steps) {
        UtilityVector candidate = shift_act(base, c);
        if (view.strictly_prefers(candidate, target)) return candidate;
    }
    return std::nullopt;
}

std::optional<UtilityVector> drop_below(const PreferenceView& view, const UtilityVector& base,
                                        const UtilityVector& target) {
    static const Rat steps[] = {Rat(0),    Rat(1, 4), Rat(1, 2), Rat(1), Rat(2),
                                Rat(4),    Rat(8),    Rat(16),   Rat(32)};
    for (const Rat& c : steps) {
        UtilityVector candidate = shift_act(base, -c);
        if (view.strictly_prefers(target, candidate)) return candidate;
    }
    return std::nullopt;
}

// Small perturbation: coordinates from {k/64 : |k| <= 8}.
UtilityVector small_noise(GridSampler& sampler, size_t dim) {
    RatVec v(dim);
    for (Rat& c : v) c = Rat(static_cast<long>(sampler.next_index(17)) - 8, 64);
    return UtilityVector(std::move(v));
}

UtilityVector add_acts(const UtilityVector& a, const UtilityVector& b) {
    RatVec out(a.dimension());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return UtilityVector(std::move(out));
}

// A grid constant the engine cannot rank against f, if one is visible from
// the engine's geometry (used to steer the interval-order audit).
std::optional<Rat> incomparability_point(const PreferenceView& view, const UtilityVector& f) {
    Functional xi(f.payoffs());
    if (const TfcPreference* tfc = view.as_tfc()) {
        Rat lo = support_min(tfc->lower_set(), xi);
        Rat hi = support_max(tfc->upper_set(), xi);
        return (lo + hi) / 2;
    }
    if (const BewleyPreference* bew = view.as_bewley()) {
        Rat lo = support_min(bew->prior_set(), xi);
        Rat hi = support_max(bew->prior_set(), xi);
        if (lo == hi) return std::nullopt;  // SEU-like: only exact equality is incomparable
        return (lo + hi) / 2;
    }
    if (const MaxminPreference* mm = view.as_maxmin()) return support_min(mm->prior_set(), xi);
    if (const SeuPreference* seu = view.as_seu()) return dot(seu->prior().mass(), f.payoffs());
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact alpha-envelopes for the openness audit. Strict preference along the
// segment alpha -> mix(f, g, alpha) against a fixed act h reduces, for every
// engine, to "envelope(alpha) > 0" with the envelope a min or max of lines.

struct AlphaEnvelope {
    std::vector<std::pair<Rat, Rat>> lines;  // (slope, intercept)
    bool is_min = true;

    Rat eval(const Rat& alpha) const {
        Rat best = lines.front().first * alpha + lines.front().second;
        for (size_t i = 1; i < lines.size(); ++i) {
            Rat v = lines[i].first * alpha + lines[i].second;
            best = is_min ? std::min(best, v) : std::max(best, v);
        }
        return best;
    }

    // Zeros on [0,1]: every boundary point of {alpha : eval > 0} is a root of
    // an active line, so per-line roots are a complete candidate list.
    std::vector<Rat> roots_in_unit() const {
        std::vector<Rat> out;
        for (const auto& [slope, icept] : lines) {
            if (slope == 0) continue;
            Rat r = -icept / slope;
            if (r < 0 || r > 1) continue;
            if (eval(r) == 0) out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

std::pair<Rat, Rat> segment_line(const Prior& p, const UtilityVector& f, const UtilityVector& g) {
    Rat at_f = dot(p.mass(), f.payoffs());
    Rat at_g = dot(p.mass(), g.payoffs());
    return {at_f - at_g, at_g};
}

// Envelope of "mix(f,g,alpha) strictly preferred to h".
AlphaEnvelope mix_beats_envelope(const PreferenceView& view, const UtilityVector& f,
                                 const UtilityVector& g, const UtilityVector& h) {
    AlphaEnvelope env;
    Functional h_xi(h.payoffs());
    if (const TfcPreference* tfc = view.as_tfc()) {
        Rat theta = support_max(tfc->upper_set(), h_xi);
        for (const Prior& p : tfc->lower_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(slope, icept - theta);
        }
    } else if (const BewleyPreference* bew = view.as_bewley()) {
        for (const Prior& p : bew->prior_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(slope, icept - dot(p.mass(), h.payoffs()));
        }
    } else if (const MaxminPreference* mm = view.as_maxmin()) {
        Rat theta = support_min(mm->prior_set(), h_xi);
        for (const Prior& p : mm->prior_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(slope, icept - theta);
        }
    } else {
        const SeuPreference* seu = view.as_seu();
        auto [slope, icept] = segment_line(seu->prior(), f, g);
        env.lines.emplace_back(slope, icept - dot(seu->prior().mass(), h.payoffs()));
    }
    return env;
}

// Envelope of "h strictly preferred to mix(f,g,alpha)".
AlphaEnvelope beats_mix_envelope(const PreferenceView& view, const UtilityVector& f,
                                 const UtilityVector& g, const UtilityVector& h) {
    AlphaEnvelope env;
    Functional h_xi(h.payoffs());
    if (const TfcPreference* tfc = view.as_tfc()) {
        Rat theta = support_min(tfc->lower_set(), h_xi);
        for (const Prior& p : tfc->upper_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(-slope, theta - icept);
        }
    } else if (const BewleyPreference* bew = view.as_bewley()) {
        for (const Prior& p : bew->prior_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(-slope, dot(p.mass(), h.payoffs()) - icept);
        }
    } else if (const MaxminPreference* mm = view.as_maxmin()) {
        // min_C h - min_C mix = max over vertices of (theta - line).
        Rat theta = support_min(mm->prior_set(), h_xi);
        env.is_min = false;
        for (const Prior& p : mm->prior_set().vertices()) {
            auto [slope, icept] = segment_line(p, f, g);
            env.lines.emplace_back(-slope, theta - icept);
        }
    } else {
        const SeuPreference* seu = view.as_seu();
        auto [slope, icept] = segment_line(seu->prior(), f, g);
        env.lines.emplace_back(-slope, dot(seu->prior().mass(), h.payoffs()) - icept);
    }
    return env;
}

// ---------------------------------------------------------------------------
// Per-axiom tuple checks. Each returns a violation witness or nothing; the
// auditor both records their output and replays witnesses through them.

std::optional<Witness> check_a1(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const UtilityVector& h,
                                const std::string& tag_hint) {
    if (tag_hint == "non-triviality") {
        if (!view.strictly_prefers(f, g))
            return Witness{{f, g, h}, {}, {}, "non-triviality"};
        return std::nullopt;
    }
    if (view.strictly_prefers(f, f)) return Witness{{f, g, h}, {}, {}, "irreflexivity"};
    if (view.strictly_prefers(f, g) && view.strictly_prefers(g, h) &&
        !view.strictly_prefers(f, h))
        return Witness{{f, g, h}, {}, {}, "transitivity"};
    return std::nullopt;
}

std::optional<Witness> check_a2(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const UtilityVector& h) {
    struct Side {
        AlphaEnvelope env;
        bool mix_first;
        const char* tag;
    };
    Side sides[2] = {{mix_beats_envelope(view, f, g, h), true, "upper"},
                     {beats_mix_envelope(view, f, g, h), false, "lower"}};
    for (const Side& side : sides) {
        auto holds_at = [&](const Rat& alpha) {
            UtilityVector m = mix(f, g, alpha);
            return side.mix_first ? view.strictly_prefers(m, h) : view.strictly_prefers(h, m);
        };
        std::vector<Rat> roots = side.env.roots_in_unit();
        for (const Rat& r : roots) {
            // The preference set is open: its boundary point cannot be strict.
            if (holds_at(r))
                return Witness{{f, g, h}, {}, {r}, std::string("openness-boundary-") + side.tag};
        }
        // Between breakpoints the engine must match the exact envelope sign.
        std::vector<Rat> grid = roots;
        grid.insert(grid.begin(), Rat(0));
        grid.push_back(Rat(1));
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            Rat mid = (grid[i] + grid[i + 1]) / 2;
            if (holds_at(mid) != (side.env.eval(mid) > 0))
                return Witness{{f, g, h}, {}, {mid},
                               std::string("envelope-mismatch-") + side.tag};
        }
        // The endpoints themselves must match too (relative openness at 0, 1).
        for (const Rat& endpoint : {Rat(0), Rat(1)}) {
            if (holds_at(endpoint) != (side.env.eval(endpoint) > 0))
                return Witness{{f, g, h}, {}, {endpoint},
                               std::string("envelope-mismatch-") + side.tag};
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_a3(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const Rat& x, const Rat& alpha) {
    UtilityVector xc = constant_act(f.dimension(), x);
    bool base = view.strictly_prefers(f, g);
    bool mixed = view.strictly_prefers(mix(f, xc, alpha), mix(g, xc, alpha));
    if (base != mixed) return Witness{{f, g}, {x}, {alpha}, "certainty-independence"};
    return std::nullopt;
}

std::optional<Witness> check_a4(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const UtilityVector& h) {
    UtilityVector midpoint = mix(g, h, Rat(1, 2));
    if (view.strictly_prefers(g, f) && view.strictly_prefers(h, f) &&
        !view.strictly_prefers(midpoint, f))
        return Witness{{f, g, h}, {}, {}, "upper-contour-midpoint"};
    if (view.strictly_prefers(f, g) && view.strictly_prefers(f, h) &&
        !view.strictly_prefers(f, midpoint))
        return Witness{{f, g, h}, {}, {}, "lower-contour-midpoint"};
    return std::nullopt;
}

std::optional<Witness> check_a5(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const Rat& x) {
    UtilityVector xc = constant_act(f.dimension(), x);
    bool f_incomparable = !view.strictly_prefers(f, xc) && !view.strictly_prefers(xc, f);
    bool g_incomparable = !view.strictly_prefers(g, xc) && !view.strictly_prefers(xc, g);
    if (!f_incomparable || !g_incomparable) return std::nullopt;
    if (view.strictly_prefers(f, g) || view.strictly_prefers(g, f))
        return Witness{{f, g}, {x}, {}, "interval-order"};
    return std::nullopt;
}

std::optional<Witness> check_a6(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const UtilityVector& h) {
    if (!(f.payoffs() == g.payoffs())) return std::nullopt;
    if (view.compare(f, h) != view.compare(g, h) || view.compare(h, f) != view.compare(h, g))
        return Witness{{f, g, h}, {}, {}, "equal-utility-substitution"};
    return std::nullopt;
}

std::optional<Witness> check_a7(const PreferenceView& view, const UtilityVector& f, const Rat& x,
                                const Rat& y) {
    for (size_t i = 0; i < f.dimension(); ++i)
        if (!(x > f[i] && f[i] > y)) return std::nullopt;
    UtilityVector xc = constant_act(f.dimension(), x);
    UtilityVector yc = constant_act(f.dimension(), y);
    if (!view.strictly_prefers(xc, f) || !view.strictly_prefers(f, yc))
        return Witness{{f}, {x, y}, {}, "sandwich-monotonicity"};
    return std::nullopt;
}

std::optional<Witness> check_a8(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g) {
    for (size_t i = 0; i < f.dimension(); ++i)
        if (!(f[i] > g[i])) return std::nullopt;
    if (!view.strictly_prefers(f, g)) return Witness{{f, g}, {}, {}, "statewise-dominance"};
    return std::nullopt;
}

std::optional<Witness> check_a9(const PreferenceView& view, const UtilityVector& f,
                                const UtilityVector& g, const UtilityVector& h,
                                const Rat& alpha) {
    bool base = view.strictly_prefers(f, g);
    bool mixed = view.strictly_prefers(mix(f, h, alpha), mix(g, h, alpha));
    if (base != mixed) return Witness{{f, g, h}, {}, {alpha}, "independence"};
    return std::nullopt;
}

std::optional<Witness> check_a10(const PreferenceView& view, const UtilityVector& f,
                                 const UtilityVector& g, const Rat& x0) {
    if (!(g.payoffs() == complement_act(f, x0).payoffs())) return std::nullopt;
    UtilityVector xc = constant_act(f.dimension(), x0);
    if (view.strictly_prefers(f, xc) && !view.strictly_prefers(xc, g))
        return Witness{{f, g}, {x0}, {}, "complementary-caution"};
    return std::nullopt;
}

std::optional<Witness> check_a11(const PreferenceView& view, const UtilityVector& f,
                                 const UtilityVector& g, const Rat& x0) {
    if (!(g.payoffs() == complement_act(f, x0).payoffs())) return std::nullopt;
    UtilityVector xc = constant_act(f.dimension(), x0);
    if (view.strictly_prefers(xc, f) && !view.strictly_prefers(g, xc))
        return Witness{{f, g}, {x0}, {}, "complementary-love"};
    return std::nullopt;
}

// Constructed seed tuples for the axioms a twofold-conservative engine is
// known to violate; mirrors the proofs' epsilon-shift and separation devices.

std::optional<Witness> constructed_a8(const PreferenceView& view) {
    const TfcPreference* tfc = view.as_tfc();
    if (tfc == nullptr) return std::nullopt;
    CollapseReport collapse = seu_collapse_check(*tfc);
    if (collapse.is_seu) return std::nullopt;
    return check_a8(view, collapse.witness->acts[0], collapse.witness->acts[1]);
}

std::optional<Witness> constructed_a9(const PreferenceView& view) {
    const TfcPreference* tfc = view.as_tfc();
    if (tfc == nullptr) return std::nullopt;
    CollapseReport collapse = seu_collapse_check(*tfc);
    if (collapse.is_seu) return std::nullopt;
    const UtilityVector& dominating = collapse.witness->acts[0];
    const UtilityVector& base = collapse.witness->acts[1];
    // Mixing away the spread with h = -base turns the unranked dominance pair
    // into a ranked pair of constants.
    return check_a9(view, dominating, base, negate_act(base), Rat(1, 2));
}

std::optional<Witness> constructed_a10(const PreferenceView& view) {
    const TfcPreference* tfc = view.as_tfc();
    if (tfc == nullptr || subset(tfc->upper_set(), tfc->lower_set())) return std::nullopt;
    for (const Prior& v : tfc->upper_set().vertices()) {
        if (contains(tfc->lower_set(), v)) continue;
        Separation sep = separating_functional(tfc->lower_set(), v);
        UtilityVector f(sep.normal.coefficients());
        f = shift_act(f, -sep.threshold);
        return check_a10(view, f, complement_act(f, Rat(0)), Rat(0));
    }
    return std::nullopt;
}

std::optional<Witness> constructed_a11(const PreferenceView& view) {
    const TfcPreference* tfc = view.as_tfc();
    if (tfc == nullptr || subset(tfc->lower_set(), tfc->upper_set())) return std::nullopt;
    for (const Prior& v : tfc->lower_set().vertices()) {
        if (contains(tfc->upper_set(), v)) continue;
        Separation sep = separating_functional(tfc->upper_set(), v);
        UtilityVector f = negate_act(UtilityVector(sep.normal.coefficients()));
        f = shift_act(f, sep.threshold);
        return check_a11(view, f, complement_act(f, Rat(0)), Rat(0));
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(AxiomId id) {
    switch (id) {
        case AxiomId::A1_Order: return "A1";
        case AxiomId::A2_Archimedean: return "A2";
        case AxiomId::A3_CertaintyIndependence: return "A3";
        case AxiomId::A4_Convexity: return "A4";
        case AxiomId::A5_IntervalOrder: return "A5";
        case AxiomId::A6_EqualUtilityMonotonicity: return "A6";
        case AxiomId::A7_SandwichMonotonicity: return "A7";
        case AxiomId::A8_Monotonicity: return "A8";
        case AxiomId::A9_Independence: return "A9";
        case AxiomId::A10_ComplementaryCaution: return "A10";
        case AxiomId::A11_ComplementaryLove: return "A11";
        case AxiomId::A12_Consistency: return "A12";
        case AxiomId::A13_Caution: return "A13";
    }
    return "?";
}

AxiomId parse_axiom_id(const std::string& text) {
    static const std::pair<const char*, AxiomId> table[] = {
        {"A1", AxiomId::A1_Order},
        {"A2", AxiomId::A2_Archimedean},
        {"A3", AxiomId::A3_CertaintyIndependence},
        {"A4", AxiomId::A4_Convexity},
        {"A5", AxiomId::A5_IntervalOrder},
        {"A6", AxiomId::A6_EqualUtilityMonotonicity},
        {"A7", AxiomId::A7_SandwichMonotonicity},
        {"A8", AxiomId::A8_Monotonicity},
        {"A9", AxiomId::A9_Independence},
        {"A10", AxiomId::A10_ComplementaryCaution},
        {"A11", AxiomId::A11_ComplementaryLove},
        {"A12", AxiomId::A12_Consistency},
        {"A13", AxiomId::A13_Caution},
    };
    for (const auto& [name, id] : table)
        if (text == name) return id;
    throw InvalidArgumentError("unknown axiom id: " + text);
}

bool replay_witness(const PreferenceView& pref, AxiomId axiom, const Witness& w) {
    switch (axiom) {
        case AxiomId::A1_Order:
            return check_a1(pref, w.acts.at(0), w.acts.at(1), w.acts.at(2), w.tag).has_value();
        case AxiomId::A2_Archimedean:
            return check_a2(pref, w.acts.at(0), w.acts.at(1), w.acts.at(2)).has_value();
        case AxiomId::A3_CertaintyIndependence:
            return check_a3(pref, w.acts.at(0), w.acts.at(1), w.constants.at(0), w.weights.at(0))
                .has_value();
        case AxiomId::A4_Convexity:
            return check_a4(pref, w.acts.at(0), w.acts.at(1), w.acts.at(2)).has_value();
        case AxiomId::A5_IntervalOrder:
            return check_a5(pref, w.acts.at(0), w.acts.at(1), w.constants.at(0)).has_value();
        case AxiomId::A6_EqualUtilityMonotonicity:
            return check_a6(pref, w.acts.at(0), w.acts.at(1), w.acts.at(2)).has_value();
        case AxiomId::A7_SandwichMonotonicity:
            return check_a7(pref, w.acts.at(0), w.constants.at(0), w.constants.at(1)).has_value();
        case AxiomId::A8_Monotonicity:
            return check_a8(pref, w.acts.at(0), w.acts.at(1)).has_value();
        case AxiomId::A9_Independence:
            return check_a9(pref, w.acts.at(0), w.acts.at(1), w.acts.at(2), w.weights.at(0))
                .has_value();
        case AxiomId::A10_ComplementaryCaution:
            return check_a10(pref, w.acts.at(0), w.acts.at(1), w.constants.at(0)).has_value();
        case AxiomId::A11_ComplementaryLove:
            return check_a11(pref, w.acts.at(0), w.acts.at(1), w.constants.at(0)).has_value();
        case AxiomId::A12_Consistency:
        case AxiomId::A13_Caution:
            throw UnsupportedAxiomError("A12/A13 witnesses replay through verify_extension");
    }
    return false;
}

AuditReport audit_axiom(const PreferenceView& pref, AxiomId axiom, long budget, uint64_t seed) {
    if (axiom == AxiomId::A12_Consistency || axiom == AxiomId::A13_Caution)
        throw UnsupportedAxiomError(
            "consistency/caution relate a preference pair; use verify_extension");
    if (budget < 1) throw InvalidArgumentError("sample budget must be at least 1");

    AuditReport report;
    report.axiom = axiom;
    report.seed = seed;
    GridSampler sampler(seed);
    size_t dim = pref.dimension();

    auto record = [&](std::optional<Witness> w) {
        ++report.samples;
        if (!w) return;
        if (!replay_witness(pref, axiom, *w))
            throw PropertyCheckError("audit witness failed to replay");
        report.violations.push_back(std::move(*w));
    };

    // Constructed tuples first: where the geometry forces a violation the
    // verdict must not depend on sampling luck.
    switch (axiom) {
        case AxiomId::A8_Monotonicity: record(constructed_a8(pref)); break;
        case AxiomId::A9_Independence: record(constructed_a9(pref)); break;
        case AxiomId::A10_ComplementaryCaution: record(constructed_a10(pref)); break;
        case AxiomId::A11_ComplementaryLove: record(constructed_a11(pref)); break;
        case AxiomId::A1_Order: {
            UtilityVector one = constant_act(dim, Rat(1));
            UtilityVector zero = constant_act(dim, Rat(0));
            record(check_a1(pref, one, zero, zero, "non-triviality"));
            break;
        }
        default: break;
    }

    for (long i = 0; i < budget; ++i) {
        switch (axiom) {
            case AxiomId::A1_Order: {
                UtilityVector f = sampler.act(dim);
                UtilityVector g =
                    i % 2 == 0 ? add_acts(shift_act(f, -sampler.positive_coordinate() * 2),
                                          small_noise(sampler, dim))
                               : sampler.act(dim);
                UtilityVector h =
                    i % 2 == 0 ? add_acts(shift_act(g, -sampler.positive_coordinate() * 2),
                                          small_noise(sampler, dim))
                               : sampler.act(dim);
                record(check_a1(pref, f, g, h, ""));
                break;
            }
            case AxiomId::A2_Archimedean:
                record(check_a2(pref, sampler.act(dim), sampler.act(dim), sampler.act(dim)));
                break;
            case AxiomId::A3_CertaintyIndependence: {
                UtilityVector f = sampler.act(dim);
                UtilityVector g = i % 2 == 0 ? shift_act(f, -sampler.positive_coordinate() * 4)
                                             : sampler.act(dim);
                record(check_a3(pref, f, g, sampler.constant(),
                                sampler.positive_mixing_weight()));
                break;
            }
            case AxiomId::A4_Convexity: {
                UtilityVector f = sampler.act(dim);
                auto g = lift_above(pref, add_acts(f, small_noise(sampler, dim)), f);
                auto h = lift_above(pref, add_acts(f, small_noise(sampler, dim)), f);
                if (g && h) {
                    record(check_a4(pref, f, *g, *h));
                } else {
                    ++report.samples;
                }
                auto gl = drop_below(pref, add_acts(f, small_noise(sampler, dim)), f);
                auto hl = drop_below(pref, add_acts(f, small_noise(sampler, dim)), f);
                if (gl && hl) {
                    record(check_a4(pref, f, *gl, *hl));
                } else {
                    ++report.samples;
                }
                break;
            }
            case AxiomId::A5_IntervalOrder: {
                UtilityVector f = sampler.act(dim);
                UtilityVector g = add_acts(f, small_noise(sampler, dim));
                Rat x = sampler.constant();
                if (auto steer = incomparability_point(pref, f); steer && i % 2 == 0) x = *steer;
                record(check_a5(pref, f, g, x));
                break;
            }
            case AxiomId::A6_EqualUtilityMonotonicity: {
                UtilityVector f = sampler.act(dim);
                UtilityVector g = mix(f, constant_act(dim, Rat(0)), Rat(1));
                record(check_a6(pref, f, g, sampler.act(dim)));
                break;
            }
            case AxiomId::A7_SandwichMonotonicity: {
                UtilityVector f = sampler.act(dim);
                Rat top = *std::max_element(f.payoffs().begin(), f.payoffs().end());
                Rat bottom = *std::min_element(f.payoffs().begin(), f.payoffs().end());
                record(check_a7(pref, f, top + sampler.positive_coordinate(),
                                bottom - sampler.positive_coordinate()));
                break;
            }
            case AxiomId::A8_Monotonicity: {
                UtilityVector g = sampler.act(dim);
                RatVec raised(dim);
                for (size_t c = 0; c < dim; ++c) raised[c] = g[c] + sampler.positive_coordinate();
                record(check_a8(pref, UtilityVector(std::move(raised)), g));
                break;
            }
            case AxiomId::A9_Independence: {
                UtilityVector f = sampler.act(dim);
                UtilityVector g = i % 2 == 0 ? shift_act(f, -sampler.positive_coordinate() * 4)
                                             : sampler.act(dim);
                record(check_a9(pref, f, g, sampler.act(dim),
                                sampler.positive_mixing_weight()));
                break;
            }
            case AxiomId::A10_ComplementaryCaution: {
                Rat x0 = sampler.constant();
                UtilityVector f = sampler.act(dim);
                if (i % 2 == 0) {
                    if (auto lifted = lift_above(pref, f, constant_act(dim, x0))) f = *lifted;
                }
                record(check_a10(pref, f, complement_act(f, x0), x0));
                break;
            }
            case AxiomId::A11_ComplementaryLove: {
                Rat x0 = sampler.constant();
                UtilityVector f = sampler.act(dim);
                if (i % 2 == 0) {
                    if (auto dropped = drop_below(pref, f, constant_act(dim, x0))) f = *dropped;
                }
                record(check_a11(pref, f, complement_act(f, x0), x0));
                break;
            }
            case AxiomId::A12_Consistency:
            case AxiomId::A13_Caution: break;  // unreachable
        }
    }
    return report;
}

bool axiom_guaranteed(const PreferenceView& pref, AxiomId axiom) {
    if (axiom == AxiomId::A12_Consistency || axiom == AxiomId::A13_Caution) return false;
    if (pref.as_seu() != nullptr) return true;
    if (const TfcPreference* tfc = pref.as_tfc()) {
        switch (axiom) {
            case AxiomId::A8_Monotonicity:
            case AxiomId::A9_Independence:
                return tfc->lower_set().is_singleton() && tfc->upper_set().is_singleton();
            case AxiomId::A10_ComplementaryCaution:
                return subset(tfc->upper_set(), tfc->lower_set());
            case AxiomId::A11_ComplementaryLove:
                return subset(tfc->lower_set(), tfc->upper_set());
            default: return true;
        }
    }
    if (const BewleyPreference* bew = pref.as_bewley()) {
        if (axiom == AxiomId::A5_IntervalOrder) return bew->prior_set().is_singleton();
        return true;
    }
    const MaxminPreference* mm = pref.as_maxmin();
    switch (axiom) {
        case AxiomId::A4_Convexity:
        case AxiomId::A9_Independence:
        case AxiomId::A11_ComplementaryLove:
            return mm->prior_set().is_singleton();
        default: return true;
    }
}

CollapseReport seu_collapse_check(const TfcPreference& pref, long search_budget) {
    const CredalSet& c = pref.lower_set();
    const CredalSet& d = pref.upper_set();
    if (c.is_singleton() && d.is_singleton() && same_hull(c, d))
        return CollapseReport{true, std::nullopt};

    size_t dim = pref.dimension();
    // Candidate directions: scaled axes first (they make readable witnesses),
    // vertex differences as a guaranteed fallback.
    std::vector<RatVec> candidates;
    for (size_t i = 0; i < dim; ++i) {
        RatVec v(dim, Rat(0));
        v[i] = 4;
        candidates.push_back(v);
    }
    for (size_t i = 0; i < dim; ++i) {
        RatVec v(dim, Rat(0));
        v[i] = -4;
        candidates.push_back(v);
    }
    for (const Prior& dv : d.vertices())
        for (const Prior& cv : c.vertices()) {
            if (dv == cv) continue;
            RatVec diff(dim);
            for (size_t i = 0; i < dim; ++i) diff[i] = dv[i] - cv[i];
            candidates.push_back(std::move(diff));
        }

    long examined = 0;
    for (const RatVec& direction : candidates) {
        if (search_budget > 0 && ++examined > search_budget) break;
        Functional xi(direction);
        Rat spread = support_max(d, xi) - support_min(c, xi);
        if (spread <= 0) continue;
        UtilityVector base(direction);
        UtilityVector dominating = shift_act(base, spread / 2);
        // dominating statewise-beats base, yet its worst evaluation over C
        // stays inside base's evaluation interval: monotonicity fails.
        if (tfc_prefers(pref, dominating, base))
            throw PropertyCheckError("collapse witness does not replay");
        return CollapseReport{false,
                              Witness{{dominating, base}, {}, {spread / 2}, "statewise-dominance"}};
    }
    throw PropertyCheckError("non-degenerate preference without a spread direction");
}

ConservatismReport verify_conservatism_order(const TfcPreference& tfc,
                                             const BewleyPreference& bewley, long budget,
                                             uint64_t seed) {
    if (tfc.dimension() != bewley.dimension())
        throw DimensionMismatchError("verify_conservatism_order");
    if (!(tfc.normalization() == bewley.normalization())) throw NormalizationMismatchError();

    ConservatismReport report{true, true, 0, std::nullopt};

    // Exact side: C* inside both C and D, vertex by vertex.
    for (const Prior& v : bewley.prior_set().vertices()) {
        if (!contains(tfc.lower_set(), v)) {
            report.inclusion = false;
            Separation sep = separating_functional(tfc.lower_set(), v);
            UtilityVector act(sep.normal.coefficients());
            UtilityVector x = constant_act(tfc.dimension(), sep.threshold);
            if (!tfc_prefers(tfc, act, x) || bewley_prefers(bewley, act, x))
                throw PropertyCheckError("conservatism witness does not replay");
            report.witness =
                Witness{{act}, {sep.threshold}, {}, "tfc-prefers-but-bewley-does-not"};
            break;
        }
        if (!contains(tfc.upper_set(), v)) {
            report.inclusion = false;
            Separation sep = separating_functional(tfc.upper_set(), v);
            UtilityVector act = negate_act(UtilityVector(sep.normal.coefficients()));
            UtilityVector x = constant_act(tfc.dimension(), -sep.threshold);
            if (!tfc_prefers(tfc, x, act) || bewley_prefers(bewley, x, act))
                throw PropertyCheckError("conservatism witness does not replay");
            report.witness =
                Witness{{act}, {Rat(-sep.threshold)}, {}, "tfc-rejects-but-bewley-does-not"};
            break;
        }
    }
    report.behavioral_pass = !report.witness.has_value();

    // Sampled implication search: f preferred by the conservative engine must
    // be preferred by unanimity.
    GridSampler sampler(seed);
    PreferenceView view{tfc};
    for (long i = 0; i < budget; ++i) {
        ++report.samples;
        UtilityVector g = sampler.act(tfc.dimension());
        auto f = lift_above(view, add_acts(g, small_noise(sampler, tfc.dimension())), g);
        if (!f) continue;
        if (!bewley_prefers(bewley, *f, g)) {
            report.behavioral_pass = false;
            if (!report.witness) report.witness = Witness{{*f, g}, {}, {}, "sampled-implication"};
        }
    }

    if (report.behavioral_pass != report.inclusion)
        throw PropertyCheckError("conservatism: geometric and behavioral verdicts disagree");
    return report;
}

ExtensionReport verify_extension(const TfcPreference& tfc, const MaxminPreference& maxmin,
                                 long budget, uint64_t seed) {
    if (tfc.dimension() != maxmin.dimension()) throw DimensionMismatchError("verify_extension");

    ExtensionReport report{false, true, true, 0, std::nullopt};
    report.holds = positive_affine_equivalent(tfc.normalization(), maxmin.normalization()) &&
                   same_hull(maxmin.prior_set(), tfc.lower_set());

    size_t dim = tfc.dimension();
    // Constructed violations when the sets differ, following the separation
    // arguments: an extra region in the maxmin set breaks consistency, a
    // missing one breaks caution.
    for (const Prior& v : maxmin.prior_set().vertices()) {
        if (contains(tfc.lower_set(), v)) continue;
        Separation sep = separating_functional(tfc.lower_set(), v);
        UtilityVector f(sep.normal.coefficients());
        UtilityVector x = constant_act(dim, sep.threshold);
        if (!tfc_prefers(tfc, f, x) || maxmin_prefers(maxmin, f, x))
            throw PropertyCheckError("consistency witness does not replay");
        report.consistency_pass = false;
        report.witness = Witness{{f}, {sep.threshold}, {}, "consistency"};
        break;
    }
    for (const Prior& v : tfc.lower_set().vertices()) {
        if (contains(maxmin.prior_set(), v)) continue;
        Separation sep = separating_functional(maxmin.prior_set(), v);
        UtilityVector g(sep.normal.coefficients());
        UtilityVector x = constant_act(dim, sep.threshold);
        if (tfc_prefers(tfc, g, x) || maxmin_prefers(maxmin, x, g))
            throw PropertyCheckError("caution witness does not replay");
        report.caution_pass = false;
        if (!report.witness) report.witness = Witness{{g}, {sep.threshold}, {}, "caution"};
        break;
    }

    GridSampler sampler(seed);
    for (long i = 0; i < budget; ++i) {
        ++report.samples;
        UtilityVector f = sampler.act(dim);
        Rat x = sampler.constant();
        UtilityVector xc = constant_act(dim, x);
        if (tfc_prefers(tfc, f, xc) && !maxmin_prefers(maxmin, f, xc)) {
            report.consistency_pass = false;
            if (!report.witness) report.witness = Witness{{f}, {x}, {}, "consistency-sampled"};
        }
        if (!tfc_prefers(tfc, f, xc) && !maxmin_prefers(maxmin, xc, f)) {
            report.caution_pass = false;
            if (!report.witness) report.witness = Witness{{f}, {x}, {}, "caution-sampled"};
        }
    }

    if ((report.consistency_pass && report.caution_pass) != report.holds)
        throw PropertyCheckError("extension: geometric and behavioral verdicts disagree");
    return report;
}

AttitudeReport ambiguity_attitude(const TfcPreference& pref, long budget, uint64_t seed) {
    bool averse = subset(pref.upper_set(), pref.lower_set());
    bool loving = subset(pref.lower_set(), pref.upper_set());
    PreferenceView view{pref};
    AuditReport caution = audit_axiom(view, AxiomId::A10_ComplementaryCaution, budget, seed);
    AuditReport love = audit_axiom(view, AxiomId::A11_ComplementaryLove, budget, seed);
    if (caution.pass() != averse || love.pass() != loving)
        throw PropertyCheckError("attitude: subset verdicts disagree with the audits");
    return AttitudeReport{averse, loving, std::move(caution), std::move(love)};
}

ComparativeAmbiguityReport compare_ambiguity(const TfcPreference& pref1,
                                             const TfcPreference& pref2, long budget,
                                             uint64_t seed) {
    if (pref1.dimension() != pref2.dimension()) throw DimensionMismatchError("compare_ambiguity");
    if (!(pref1.normalization() == pref2.normalization())) throw NormalizationMismatchError();

    ComparativeAmbiguityReport report{subset(pref2.lower_set(), pref1.lower_set()),
                                      subset(pref2.upper_set(), pref1.upper_set()), 0,
                                      std::nullopt, std::nullopt};
    size_t dim = pref1.dimension();

    if (!report.more_averse) {
        for (const Prior& q : pref2.lower_set().vertices()) {
            if (contains(pref1.lower_set(), q)) continue;
            Separation sep = separating_functional(pref1.lower_set(), q);
            UtilityVector f(sep.normal.coefficients());
            UtilityVector x = constant_act(dim, sep.threshold);
            if (!tfc_prefers(pref1, f, x) || tfc_prefers(pref2, f, x))
                throw PropertyCheckError("aversion witness does not replay");
            report.aversion_witness = Witness{{f}, {sep.threshold}, {}, "aversion"};
            break;
        }
    }
    if (!report.more_loving) {
        for (const Prior& q : pref2.upper_set().vertices()) {
            if (contains(pref1.upper_set(), q)) continue;
            Separation sep = separating_functional(pref1.upper_set(), q);
            UtilityVector f = negate_act(UtilityVector(sep.normal.coefficients()));
            UtilityVector x = constant_act(dim, -sep.threshold);
            if (!tfc_prefers(pref1, x, f) || tfc_prefers(pref2, x, f))
                throw PropertyCheckError("loving witness does not replay");
            report.loving_witness = Witness{{f}, {Rat(-sep.threshold)}, {}, "loving"};
            break;
        }
    }

    GridSampler sampler(seed);
    PreferenceView view1{pref1};
    bool averse_sampled_ok = true;
    bool loving_sampled_ok = true;
    for (long i = 0; i < budget; ++i) {
        ++report.samples;
        Rat x = sampler.constant();
        UtilityVector xc = constant_act(dim, x);
        UtilityVector base = sampler.act(dim);
        if (auto f = lift_above(view1, base, xc)) {
            if (tfc_prefers(pref1, *f, xc) && !tfc_prefers(pref2, *f, xc)) {
                averse_sampled_ok = false;
                if (!report.aversion_witness)
                    report.aversion_witness = Witness{{*f}, {x}, {}, "aversion-sampled"};
            }
        }
        if (auto f = drop_below(view1, base, xc)) {
            if (tfc_prefers(pref1, xc, *f) && !tfc_prefers(pref2, xc, *f)) {
                loving_sampled_ok = false;
                if (!report.loving_witness)
                    report.loving_witness = Witness{{*f}, {x}, {}, "loving-sampled"};
            }
        }
    }
    bool behavioral_averse = averse_sampled_ok && !report.aversion_witness.has_value();
    bool behavioral_loving = loving_sampled_ok && !report.loving_witness.has_value();
    if (behavioral_averse != report.more_averse || behavioral_loving != report.more_loving)
        throw PropertyCheckError("comparative ambiguity: verdicts disagree");
    return report;
}

// ---------------------------------------------------------------------------

const char* to_string(Chosen c) {
    switch (c) {
        case Chosen::F: return "f";
        case Chosen::G: return "g";
        case Chosen::X: return "x";
    }
    return "?";
}

ChoiceInstance induced_choice(const PreferenceView& pref, std::vector<MenuRecord> menus,
                              Rat status_quo) {
    if (menus.empty()) throw InvalidArgumentError("choice instance needs at least one menu");
    ChoiceInstance instance{std::move(status_quo), std::move(menus), {}};
    size_t dim = pref.dimension();
    UtilityVector x = constant_act(dim, instance.status_quo);
    for (const MenuRecord& menu : instance.menus) {
        bool f_beats_x = pref.strictly_prefers(menu.f, x);
        bool g_beats_x = pref.strictly_prefers(menu.g, x);
        if (!f_beats_x && !g_beats_x) {
            instance.chosen.push_back(Chosen::X);
        } else if (f_beats_x && !pref.strictly_prefers(menu.g, menu.f)) {
            // Tie policy: when both acts qualify, the first menu element wins.
            instance.chosen.push_back(Chosen::F);
        } else {
            instance.chosen.push_back(Chosen::G);
        }
    }
    return instance;
}

RationalizabilityReport check_weak_rationalizable(const ChoiceInstance& instance,
                                                  const PreferenceView& pref) {
    if (instance.menus.size() != instance.chosen.size())
        throw InvalidArgumentError("choice instance: menus and choices differ in length");
    if (instance.menus.empty()) return RationalizabilityReport{true, std::nullopt, "vacuous"};

    UtilityVector x = constant_act(pref.dimension(), instance.status_quo);
    for (size_t i = 0; i < instance.menus.size(); ++i) {
        const MenuRecord& menu = instance.menus[i];
        switch (instance.chosen[i]) {
            case Chosen::X:
                if (pref.strictly_prefers(menu.f, x))
                    return {false, i, "kept status quo although f beats it"};
                if (pref.strictly_prefers(menu.g, x))
                    return {false, i, "kept status quo although g beats it"};
                break;
            case Chosen::F:
                if (!pref.strictly_prefers(menu.f, x))
                    return {false, i, "chose f although it does not beat the status quo"};
                if (pref.strictly_prefers(menu.g, menu.f))
                    return {false, i, "chose f although g beats it"};
                break;
            case Chosen::G:
                if (!pref.strictly_prefers(menu.g, x))
                    return {false, i, "chose g although it does not beat the status quo"};
                if (pref.strictly_prefers(menu.f, menu.g))
                    return {false, i, "chose g although f beats it"};
                break;
        }
    }
    return RationalizabilityReport{true, std::nullopt, ""};
}

ChoiceInstance construct_tfc_only_witness(const TfcPreference& pref) {
    if (!pref.symmetric())
        throw AsymmetricPreferenceError("witness construction requires C = D");
    if (pref.lower_set().is_singleton()) throw PreferenceIsSeuError();

    size_t dim = pref.dimension();
    std::vector<RatVec> candidates;
    for (size_t i = 0; i < dim; ++i) {
        RatVec v(dim, Rat(0));
        v[i] = 4;
        candidates.push_back(v);
    }
    for (size_t i = 0; i < dim; ++i) {
        RatVec v(dim, Rat(0));
        v[i] = -4;
        candidates.push_back(v);
    }
    for (const Prior& a : pref.lower_set().vertices())
        for (const Prior& b : pref.lower_set().vertices()) {
            if (a == b) continue;
            RatVec diff(dim);
            for (size_t i = 0; i < dim; ++i) diff[i] = a[i] - b[i];
            candidates.push_back(std::move(diff));
        }

    for (const RatVec& direction : candidates) {
        Functional xi(direction);
        Rat lo = support_min(pref.lower_set(), xi);
        Rat spread = support_max(pref.lower_set(), xi) - lo;
        if (spread <= 0) continue;

        UtilityVector f(direction);
        UtilityVector g = shift_act(f, spread / 2);
        // Largest integer strictly below the worst-case evaluation of f.
        Int floor_lo = numerator(lo) / denominator(lo);
        if (Rat(floor_lo) > lo || (denominator(lo) == 1 && Rat(floor_lo) == lo)) floor_lo -= 1;
        Rat x_level(floor_lo);

        ChoiceInstance instance{x_level, {MenuRecord{f, g}}, {Chosen::F}};
        UtilityVector x = constant_act(dim, x_level);
        bool f_beats_x = tfc_prefers(pref, f, x);
        bool g_beats_f = tfc_prefers(pref, g, f);
        bool dominates = true;
        for (size_t i = 0; i < dim; ++i) dominates = dominates && g[i] > f[i];
        if (!f_beats_x || g_beats_f || !dominates)
            throw PropertyCheckError("choice witness law failed");
        return instance;
    }
    throw PreferenceIsSeuError();
}

bool bewley_impossible(const ChoiceInstance& instance) {
    auto dominates = [](const UtilityVector& a, const UtilityVector& b) {
        for (size_t i = 0; i < a.dimension(); ++i)
            if (!(a[i] > b[i])) return false;
        return true;
    };
    for (size_t i = 0; i < instance.menus.size(); ++i) {
        const MenuRecord& menu = instance.menus[i];
        UtilityVector x = constant_act(menu.f.dimension(), instance.status_quo);
        switch (instance.chosen[i]) {
            case Chosen::F:
                // Unanimity ranks a statewise-dominating rival above f, which
                // the f-choice forbids.
                if (dominates(menu.g, menu.f)) return true;
                break;
            case Chosen::G:
                if (dominates(menu.f, menu.g)) return true;
                break;
            case Chosen::X:
                if (dominates(menu.f, x) || dominates(menu.g, x)) return true;
                break;
        }
    }
    return false;
}

}  // namespace twofold
