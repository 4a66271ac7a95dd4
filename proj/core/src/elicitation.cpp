#include "twofold/elicitation.hpp"

#include "twofold/errors.hpp"
#include "twofold/sampling.hpp"

#include <algorithm>
#include <optional>

namespace twofold {

namespace {

// Records answers per constant level and flags any pair violating the
// monotone shape the representation forces on oracle answers.
class MonotoneRecord {
public:
    explicit MonotoneRecord(SupportSide side) : side_(side) {}

    void observe(const Rat& x, bool answer) {
        // C side: "act > x" is monotone non-increasing in x.
        // D side: "x > act" is monotone non-decreasing in x.
        bool high_kind = (side_ == SupportSide::CMin) ? !answer : answer;
        if (high_kind) {
            if (highest_low_ && *highest_low_ >= x) throw InconsistentOracleError();
            if (!lowest_high_ || x < *lowest_high_) lowest_high_ = x;
        } else {
            if (lowest_high_ && x >= *lowest_high_) throw InconsistentOracleError();
            if (!highest_low_ || x > *highest_low_) highest_low_ = x;
        }
    }

private:
    SupportSide side_;
    // "low" = the answer expected below the threshold, "high" = above it.
    std::optional<Rat> highest_low_;
    std::optional<Rat> lowest_high_;
};

UtilityVector direction_act(const Functional& direction) {
    return UtilityVector(direction.coefficients());
}

bool ask(const PreferenceOracle& oracle, const Functional& direction, SupportSide side,
         const Rat& level, long& queries, MonotoneRecord& record) {
    UtilityVector act = direction_act(direction);
    UtilityVector constant = UtilityVector::constant(direction.dimension(), level);
    ++queries;
    bool answer = (side == SupportSide::CMin) ? oracle(act, constant) : oracle(constant, act);
    record.observe(level, answer);
    return answer;
}

// True iff the direction is a positive multiple of the signed axis.
bool is_axis(const Functional& d, size_t axis, int sign) {
    for (size_t i = 0; i < d.dimension(); ++i) {
        if (i == axis) {
            if (sign > 0 ? d[i] <= 0 : d[i] >= 0) return false;
        } else if (d[i] != 0) {
            return false;
        }
    }
    return true;
}

size_t rational_rank(const std::vector<Functional>& directions, size_t dimension) {
    std::vector<RatVec> rows;
    for (const Functional& d : directions) rows.push_back(d.coefficients());
    size_t rank = 0;
    for (size_t col = 0; col < dimension && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / rows[rank][col];
            for (size_t j = 0; j < dimension; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Functional> circle_directions_32() {
    // t = tan(theta/2) rounded to the /64 grid for theta = 2*pi*k/32; the
    // direction is then the exact rational point (1 - t^2, 2t)/(1 + t^2)
    // scaled to a primitive integer vector. k in {0, 8, 16, 24} lands on the
    // signed axes exactly.
    static const long half_tangent_64[16] = {0,  6,  13, 19,  27,  34,  43,  53,
                                             64, 78, 96, 120, 155, 211, 322, 650};
    std::vector<Functional> out;
    for (int k = 0; k < 32; ++k) {
        if (k == 16) {
            out.emplace_back(RatVec{Rat(-1), Rat(0)});
            continue;
        }
        long n = k < 16 ? half_tangent_64[k] : -half_tangent_64[32 - k];
        RatVec dir{Rat(4096 - n * n), Rat(128 * n)};
        out.emplace_back(primitive_integer_direction(dir));
    }
    return out;
}

std::vector<Functional> icosphere_directions_42() {
    // Icosahedron with the golden ratio replaced by 13/8, once subdivided:
    // 12 vertices plus 30 edge midpoints. Midpoints of the six short
    // rectangle edges are exactly the signed axes.
    const Rat phi(13, 8);
    std::vector<RatVec> vertices;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            vertices.push_back({Rat(0), Rat(s1), s2 * phi});
            vertices.push_back({Rat(s1), s2 * phi, Rat(0)});
            vertices.push_back({s2 * phi, Rat(0), Rat(s1)});
        }
    // Edges: the 30 closest pairs; with phi = 13/8 those are exactly the
    // pairs at squared distance <= 258/64.
    const Rat edge_cut(258, 64);
    std::vector<RatVec> directions = vertices;
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            Rat d2 = 0;
            for (size_t c = 0; c < 3; ++c) {
                Rat diff = vertices[i][c] - vertices[j][c];
                d2 += diff * diff;
            }
            if (d2 <= edge_cut) {
                RatVec mid(3);
                for (size_t c = 0; c < 3; ++c) mid[c] = vertices[i][c] + vertices[j][c];
                directions.push_back(std::move(mid));
            }
        }
    }
    std::vector<RatVec> primitive;
    for (RatVec& d : directions) primitive.push_back(primitive_integer_direction(d));
    std::sort(primitive.begin(), primitive.end());
    primitive.erase(std::unique(primitive.begin(), primitive.end()), primitive.end());
    std::vector<Functional> out;
    for (RatVec& d : primitive) out.emplace_back(std::move(d));
    return out;
}

}  // namespace

SupportSample elicit_support(const PreferenceOracle& oracle, const Functional& direction,
                             SupportSide side, const Rat& bracket_lo, const Rat& bracket_hi,
                             const Rat& tolerance) {
    if (tolerance <= 0) throw InvalidArgumentError("tolerance must be positive");
    if (bracket_lo >= bracket_hi) throw BracketError("bracket invalid: empty interval");

    long queries = 0;
    MonotoneRecord record(side);
    // C side: answer(lo) must be true ("act beats every constant below the
    // minimum") and answer(hi) false. D side mirrored.
    bool at_lo = ask(oracle, direction, side, bracket_lo, queries, record);
    bool at_hi = ask(oracle, direction, side, bracket_hi, queries, record);
    bool want_lo = (side == SupportSide::CMin);
    if (at_lo != want_lo || at_hi == want_lo)
        throw BracketError("bracket invalid: endpoints do not straddle the support value");

    Rat lo = bracket_lo;
    Rat hi = bracket_hi;
    while (hi - lo > tolerance) {
        Rat mid = (lo + hi) / 2;
        bool answer = ask(oracle, direction, side, mid, queries, record);
        if (answer == want_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return SupportSample{direction, side, std::move(lo), std::move(hi), queries};
}

std::vector<Functional> default_directions(size_t dimension) {
    if (dimension < 2) throw InvalidArgumentError("need at least 2 states");
    if (dimension == 2) return circle_directions_32();
    if (dimension == 3) return icosphere_directions_42();
    std::vector<Functional> out;
    for (size_t i = 0; i < dimension; ++i) {
        RatVec plus(dimension, Rat(0)), minus(dimension, Rat(0));
        plus[i] = 1;
        minus[i] = -1;
        out.emplace_back(std::move(plus));
        out.emplace_back(std::move(minus));
    }
    for (uint64_t mask = 0; mask < (uint64_t{1} << dimension); ++mask) {
        RatVec v(dimension);
        for (size_t i = 0; i < dimension; ++i) v[i] = (mask >> i) & 1 ? Rat(1) : Rat(-1);
        out.emplace_back(std::move(v));
    }
    return out;
}

RecoveredSets recover_prior_sets(const PreferenceOracle& oracle,
                                 const std::vector<Functional>& directions,
                                 const Rat& tolerance) {
    if (tolerance <= 0) throw InvalidArgumentError("tolerance must be positive");
    if (directions.empty()) throw DegenerateDirectionsError();
    size_t dimension = directions.front().dimension();
    for (const Functional& d : directions)
        if (d.dimension() != dimension) throw DimensionMismatchError("direction dimensions");

    if (rational_rank(directions, dimension) != dimension)
        throw DegenerateDirectionsError("degenerate directions: set does not span");
    for (size_t axis = 0; axis < dimension; ++axis) {
        for (int sign : {1, -1}) {
            bool found = false;
            for (const Functional& d : directions)
                if (is_axis(d, axis, sign)) {
                    found = true;
                    break;
                }
            if (!found)
                throw DegenerateDirectionsError("degenerate directions: missing a signed axis");
        }
    }

    std::vector<Halfspace> c_halfspaces;
    std::vector<Halfspace> d_halfspaces;
    std::vector<SupportSample> samples;
    long total_queries = 0;
    for (const Functional& xi : directions) {
        Rat lo_coord = xi[0], hi_coord = xi[0];
        for (size_t i = 1; i < dimension; ++i) {
            lo_coord = std::min(lo_coord, xi[i]);
            hi_coord = std::max(hi_coord, xi[i]);
        }
        Rat bracket_lo = lo_coord - 1;
        Rat bracket_hi = hi_coord + 1;

        SupportSample c_sample =
            elicit_support(oracle, xi, SupportSide::CMin, bracket_lo, bracket_hi, tolerance);
        // answer(lo) true certifies min over C > lo, so the halfspace is sound.
        c_halfspaces.push_back(Halfspace{xi.coefficients(), c_sample.lo});
        total_queries += c_sample.queries;
        samples.push_back(std::move(c_sample));

        SupportSample d_sample =
            elicit_support(oracle, xi, SupportSide::DMax, bracket_lo, bracket_hi, tolerance);
        // answer(hi) true certifies max over D < hi: <xi, p> <= hi on D.
        RatVec negated(dimension);
        for (size_t i = 0; i < dimension; ++i) negated[i] = -xi[i];
        d_halfspaces.push_back(Halfspace{std::move(negated), Rat(-d_sample.hi)});
        total_queries += d_sample.queries;
        samples.push_back(std::move(d_sample));
    }

    return RecoveredSets{CredalSet::from_halfspaces(dimension, c_halfspaces),
                         CredalSet::from_halfspaces(dimension, d_halfspaces), tolerance,
                         std::move(samples), total_queries};
}

RecoveredSets recover_prior_sets(const PreferenceOracle& oracle, size_t dimension,
                                 const Rat& tolerance) {
    return recover_prior_sets(oracle, default_directions(dimension), tolerance);
}

UniquenessReport verify_uniqueness(const TfcPreference& rep1, const TfcPreference& rep2,
                                   long probe_budget) {
    if (rep1.dimension() != rep2.dimension()) throw DimensionMismatchError("verify_uniqueness");

    bool norms_ok = positive_affine_equivalent(rep1.normalization(), rep2.normalization());
    bool c_equal = same_hull(rep1.lower_set(), rep2.lower_set());
    bool d_equal = same_hull(rep1.upper_set(), rep2.upper_set());

    if (norms_ok && c_equal && d_equal) {
        // Behavioral probe: equal hulls mean both engines are literally the
        // same function of (f, x); disagreement indicates a defect.
        GridSampler sampler(0x5eed);
        for (long i = 0; i < probe_budget; ++i) {
            UtilityVector f = sampler.act(rep1.dimension());
            UtilityVector x = UtilityVector::constant(rep1.dimension(), sampler.constant());
            if (tfc_prefers(rep1, f, x) != tfc_prefers(rep2, f, x) ||
                tfc_prefers(rep1, x, f) != tfc_prefers(rep2, x, f))
                throw PropertyCheckError("equal representations disagree on a probe");
        }
        return UniquenessReport{true, std::nullopt, std::nullopt, "representations equivalent"};
    }

    // Build an act-vs-constant comparison the two engines disagree on. A
    // vertex of one C outside the other C separates via the lower support;
    // for D the mirrored act works on the upper support.
    auto c_witness = [&](const TfcPreference& owner, const TfcPreference& other,
                         const char* tag) -> std::optional<UniquenessReport> {
        for (const Prior& v : owner.lower_set().vertices()) {
            if (contains(other.lower_set(), v)) continue;
            Separation sep = separating_functional(other.lower_set(), v);
            UtilityVector act(sep.normal.coefficients());
            UtilityVector x = UtilityVector::constant(owner.dimension(), sep.threshold);
            if (tfc_prefers(owner, act, x) == tfc_prefers(other, act, x))
                throw PropertyCheckError("uniqueness witness does not replay");
            return UniquenessReport{false, act, sep.threshold, tag};
        }
        return std::nullopt;
    };
    auto d_witness = [&](const TfcPreference& owner, const TfcPreference& other,
                         const char* tag) -> std::optional<UniquenessReport> {
        for (const Prior& v : owner.upper_set().vertices()) {
            if (contains(other.upper_set(), v)) continue;
            Separation sep = separating_functional(other.upper_set(), v);
            RatVec negated(sep.normal.dimension());
            for (size_t i = 0; i < negated.size(); ++i) negated[i] = -sep.normal[i];
            UtilityVector act(std::move(negated));
            UtilityVector x = UtilityVector::constant(owner.dimension(), -sep.threshold);
            if (tfc_prefers(owner, x, act) == tfc_prefers(other, x, act))
                throw PropertyCheckError("uniqueness witness does not replay");
            return UniquenessReport{false, act, Rat(-sep.threshold), tag};
        }
        return std::nullopt;
    };

    if (!c_equal) {
        if (auto r = c_witness(rep2, rep1, "C sets differ: rep2 vertex outside rep1")) return *r;
        if (auto r = c_witness(rep1, rep2, "C sets differ: rep1 vertex outside rep2")) return *r;
    }
    if (!d_equal) {
        if (auto r = d_witness(rep2, rep1, "D sets differ: rep2 vertex outside rep1")) return *r;
        if (auto r = d_witness(rep1, rep2, "D sets differ: rep1 vertex outside rep2")) return *r;
    }
    throw PropertyCheckError("hull inequality without a separating vertex");
}

}  // namespace twofold
