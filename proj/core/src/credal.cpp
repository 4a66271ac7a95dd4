#include "twofold/credal.hpp"

#include "twofold/errors.hpp"
#include "twofold/lp.hpp"
#include "twofold/polygon.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace twofold {

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Membership of `point` in the hull of `vertices`, by feasibility of the
// convex-combination system in exact rationals.
bool hull_contains(const std::vector<RatVec>& vertices, const RatVec& point) {
    size_t n = point.size();
    size_t k = vertices.size();
    std::vector<RatVec> rows;
    RatVec rhs;
    for (size_t i = 0; i < n; ++i) {
        RatVec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = vertices[j][i];
        rows.push_back(std::move(row));
        rhs.push_back(point[i]);
    }
    rows.emplace_back(k, Rat(1));
    rhs.emplace_back(1);
    return lp::feasible(rows, rhs);
}

// Exact square linear solve; nullopt when singular.
std::optional<RatVec> solve_square(std::vector<RatVec> m, RatVec rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rat p = m[col][col];
        for (size_t j = col; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

Halfspace plane_halfspace(const Rat& a, const Rat& b, const Rat& c) {
    // a*x + b*y >= c on the (x, y) chart of the 3-state simplex lifts to the
    // functional (a, b, 0).
    RatVec normal{a, b, Rat(0)};
    RatVec scaled = primitive_integer_direction(normal);
    Rat factor = normal[0] != 0   ? Rat(scaled[0] / normal[0])
                 : normal[1] != 0 ? Rat(scaled[1] / normal[1])
                                  : Rat(1);
    return Halfspace{std::move(scaled), Rat(c * factor)};
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) throw InvalidArgumentError("state space needs at least 2 states");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InvalidArgumentError("state labels must be distinct");
}

Prior::Prior(RatVec mass) : mass_(std::move(mass)) {
    if (mass_.empty()) throw InvalidArgumentError("empty prior");
    Rat sum = 0;
    for (const Rat& m : mass_) {
        if (m < 0) throw InvalidArgumentError("prior has a negative coordinate");
        sum += m;
    }
    if (sum != 1) throw InvalidArgumentError("prior does not sum to 1");
}

Functional::Functional(RatVec coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw InvalidArgumentError("empty functional");
}

CredalSet::CredalSet(std::vector<Prior> vertices) {
    if (vertices.empty()) throw InvalidArgumentError("credal set needs at least one vertex");
    size_t dim = vertices.front().dimension();
    for (const Prior& v : vertices)
        if (v.dimension() != dim) throw DimensionMismatchError("credal set vertex dimensions");

    // Dedupe, then drop every vertex inside the hull of the others. The
    // surviving set is exactly the extreme points, independent of order.
    std::vector<RatVec> raw;
    for (const Prior& v : vertices) raw.push_back(v.mass());
    std::sort(raw.begin(), raw.end(), lex_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    for (size_t i = 0; i < raw.size();) {
        if (raw.size() == 1) break;
        std::vector<RatVec> others;
        for (size_t j = 0; j < raw.size(); ++j)
            if (j != i) others.push_back(raw[j]);
        if (hull_contains(others, raw[i])) {
            raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    for (RatVec& v : raw) vertices_.emplace_back(std::move(v));
}

CredalSet CredalSet::singleton(Prior p) {
    std::vector<Prior> v;
    v.push_back(std::move(p));
    return CredalSet(std::move(v));
}

CredalSet CredalSet::from_halfspaces(size_t dimension, const std::vector<Halfspace>& halfspaces) {
    for (const Halfspace& h : halfspaces)
        if (h.normal.size() != dimension) throw DimensionMismatchError("halfspace dimension");

    std::vector<Prior> vertices;
    if (dimension == 2) {
        // One-parameter chart p = (x, 1-x).
        Rat lo = 0, hi = 1;
        for (const Halfspace& h : halfspaces) {
            Rat coeff = h.normal[0] - h.normal[1];
            Rat bound = h.offset - h.normal[1];
            if (coeff > 0) {
                lo = std::max(lo, Rat(bound / coeff));
            } else if (coeff < 0) {
                hi = std::min(hi, Rat(bound / coeff));
            } else if (bound > 0) {
                throw InvalidArgumentError("halfspace intersection is empty");
            }
        }
        if (lo > hi) throw InvalidArgumentError("halfspace intersection is empty");
        vertices.emplace_back(RatVec{lo, 1 - lo});
        if (hi != lo) vertices.emplace_back(RatVec{hi, 1 - hi});
    } else if (dimension == 3) {
        // Two-parameter chart p = (x, y, 1-x-y); clip the simplex triangle.
        Polygon2 poly{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
        for (const Halfspace& h : halfspaces) {
            Rat a = h.normal[0] - h.normal[2];
            Rat b = h.normal[1] - h.normal[2];
            Rat c = h.offset - h.normal[2];
            poly = clip_halfplane(poly, a, b, c);
            if (poly.empty()) throw InvalidArgumentError("halfspace intersection is empty");
        }
        for (const Point2& p : poly) vertices.emplace_back(RatVec{p.x, p.y, 1 - p.x - p.y});
    } else {
        // Brute force: every choice of dimension-1 active constraints plus the
        // normalization row pins a candidate point.
        std::vector<Halfspace> pool;
        for (size_t i = 0; i < dimension; ++i) {
            RatVec axis(dimension, Rat(0));
            axis[i] = 1;
            pool.push_back(Halfspace{axis, Rat(0)});
        }
        pool.insert(pool.end(), halfspaces.begin(), halfspaces.end());

        std::vector<size_t> pick(dimension - 1);
        std::vector<RatVec> found;
        auto try_combination = [&]() {
            std::vector<RatVec> m;
            RatVec rhs;
            for (size_t idx : pick) {
                m.push_back(pool[idx].normal);
                rhs.push_back(pool[idx].offset);
            }
            m.emplace_back(dimension, Rat(1));
            rhs.emplace_back(1);
            auto point = solve_square(std::move(m), std::move(rhs));
            if (!point) return;
            for (const Rat& coord : *point)
                if (coord < 0) return;
            for (const Halfspace& h : halfspaces)
                if (dot(h.normal, *point) < h.offset) return;
            found.push_back(std::move(*point));
        };
        // Iterate all (dimension-1)-subsets of the pool.
        auto recurse = [&](auto&& self, size_t depth, size_t first) -> void {
            if (depth == pick.size()) {
                try_combination();
                return;
            }
            for (size_t i = first; i < pool.size(); ++i) {
                pick[depth] = i;
                self(self, depth + 1, i + 1);
            }
        };
        recurse(recurse, 0, 0);
        if (found.empty()) throw InvalidArgumentError("halfspace intersection is empty");
        for (RatVec& v : found) vertices.emplace_back(std::move(v));
    }
    return CredalSet(std::move(vertices));
}

std::vector<Halfspace> CredalSet::halfspaces() const {
    size_t n = dimension();
    std::vector<Halfspace> out;
    if (n == 2) {
        const Rat& lo = vertices_.front()[0];
        const Rat& hi = vertices_.back()[0];
        out.push_back(Halfspace{RatVec{Rat(1), Rat(0)}, lo});
        out.push_back(Halfspace{RatVec{Rat(-1), Rat(0)}, Rat(-hi)});
        return out;
    }
    if (n != 3) throw InvalidArgumentError("halfspace derivation only for 2 or 3 states");

    std::vector<Point2> pts;
    for (const Prior& v : vertices_) pts.push_back(Point2{v[0], v[1]});
    if (pts.size() == 1) {
        for (size_t i = 0; i < 2; ++i) {
            RatVec axis(3, Rat(0)), neg(3, Rat(0));
            axis[i] = 1;
            neg[i] = -1;
            out.push_back(Halfspace{axis, vertices_.front()[i]});
            out.push_back(Halfspace{neg, Rat(-vertices_.front()[i])});
        }
        return out;
    }
    if (pts.size() == 2) {
        Rat dx = pts[1].x - pts[0].x;
        Rat dy = pts[1].y - pts[0].y;
        // Both sides of the carrier line, then caps at the endpoints.
        out.push_back(plane_halfspace(-dy, dx, -dy * pts[0].x + dx * pts[0].y));
        out.push_back(plane_halfspace(dy, -dx, dy * pts[0].x - dx * pts[0].y));
        Rat t0 = dx * pts[0].x + dy * pts[0].y;
        Rat t1 = dx * pts[1].x + dy * pts[1].y;
        out.push_back(plane_halfspace(dx, dy, std::min(t0, t1)));
        out.push_back(plane_halfspace(-dx, -dy, -std::max(t0, t1)));
        return out;
    }
    Polygon2 hull = convex_hull_2d(pts);
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point2& p = hull[i];
        const Point2& q = hull[(i + 1) % hull.size()];
        Rat a = p.y - q.y;
        Rat b = q.x - p.x;
        out.push_back(plane_halfspace(a, b, a * p.x + b * p.y));
    }
    return out;
}

Rat support_min(const CredalSet& set, const Functional& xi) {
    if (xi.dimension() != set.dimension()) throw DimensionMismatchError("support_min");
    Rat best = dot(set.vertices().front().mass(), xi.coefficients());
    for (size_t i = 1; i < set.vertices().size(); ++i)
        best = std::min(best, dot(set.vertices()[i].mass(), xi.coefficients()));
    return best;
}

Rat support_max(const CredalSet& set, const Functional& xi) {
    if (xi.dimension() != set.dimension()) throw DimensionMismatchError("support_max");
    Rat best = dot(set.vertices().front().mass(), xi.coefficients());
    for (size_t i = 1; i < set.vertices().size(); ++i)
        best = std::max(best, dot(set.vertices()[i].mass(), xi.coefficients()));
    return best;
}

bool contains(const CredalSet& set, const Prior& q) {
    if (q.dimension() != set.dimension()) throw DimensionMismatchError("contains");
    std::vector<RatVec> raw;
    for (const Prior& v : set.vertices()) raw.push_back(v.mass());
    return hull_contains(raw, q.mass());
}

bool intersects(const CredalSet& a, const CredalSet& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatchError("intersects");
    size_t n = a.dimension();
    size_t ka = a.vertices().size();
    size_t kb = b.vertices().size();
    // Variables: lambda over a's vertices, mu over b's.
    std::vector<RatVec> rows;
    RatVec rhs;
    for (size_t i = 0; i < n; ++i) {
        RatVec row(ka + kb);
        for (size_t j = 0; j < ka; ++j) row[j] = a.vertices()[j][i];
        for (size_t j = 0; j < kb; ++j) row[ka + j] = -b.vertices()[j][i];
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    RatVec sum_a(ka + kb, Rat(0)), sum_b(ka + kb, Rat(0));
    for (size_t j = 0; j < ka; ++j) sum_a[j] = 1;
    for (size_t j = 0; j < kb; ++j) sum_b[ka + j] = 1;
    rows.push_back(std::move(sum_a));
    rhs.emplace_back(1);
    rows.push_back(std::move(sum_b));
    rhs.emplace_back(1);
    return lp::feasible(rows, rhs);
}

bool subset(const CredalSet& inner, const CredalSet& outer) {
    if (inner.dimension() != outer.dimension()) throw DimensionMismatchError("subset");
    for (const Prior& v : inner.vertices())
        if (!contains(outer, v)) return false;
    return true;
}

bool same_hull(const CredalSet& a, const CredalSet& b) {
    // Canonical vertex lists make hull equality plain list equality.
    return a.vertices() == b.vertices();
}

Separation separating_functional(const CredalSet& set, const Prior& q) {
    if (q.dimension() != set.dimension()) throw DimensionMismatchError("separating_functional");
    size_t n = set.dimension();
    size_t k = set.vertices().size();

    // Margin program over the shifted box m' = m + 1 in [0, 2]^n:
    //   maximize t  s.t.  <m', v_j - q> - t - s_j = 0,  m'_i + w_i = 2.
    // Variable layout: m' (n), t+, t-, s (k), w (n).
    size_t vars = n + 2 + k + n;
    auto base_rows = [&](bool pin_margin, const Rat& margin) {
        std::vector<RatVec> rows;
        RatVec rhs;
        for (size_t j = 0; j < k; ++j) {
            RatVec row(vars, Rat(0));
            for (size_t i = 0; i < n; ++i) row[i] = set.vertices()[j][i] - q[i];
            row[n] = -1;
            row[n + 1] = 1;
            row[n + 2 + j] = -1;
            rows.push_back(std::move(row));
            rhs.emplace_back(0);
        }
        for (size_t i = 0; i < n; ++i) {
            RatVec row(vars, Rat(0));
            row[i] = 1;
            row[n + 2 + k + i] = 1;
            rows.push_back(std::move(row));
            rhs.emplace_back(2);
        }
        if (pin_margin) {
            RatVec row(vars, Rat(0));
            row[n] = 1;
            row[n + 1] = -1;
            rows.push_back(std::move(row));
            rhs.push_back(margin);
        }
        return std::pair{rows, rhs};
    };

    lp::Problem margin_lp;
    std::tie(margin_lp.rows, margin_lp.rhs) = base_rows(false, Rat(0));
    margin_lp.cost.assign(vars, Rat(0));
    margin_lp.cost[n] = -1;
    margin_lp.cost[n + 1] = 1;
    lp::Solution margin = lp::solve(margin_lp);
    if (margin.status != lp::Status::Optimal) throw PropertyCheckError("margin program failed");
    Rat best_margin = -margin.objective;
    if (best_margin <= 0) throw NotSeparableError();

    // Lexicographically smallest maximum-margin normal: fix the margin, then
    // minimize each coordinate in turn.
    RatVec fixed;
    for (size_t stage = 0; stage < n; ++stage) {
        lp::Problem step;
        std::tie(step.rows, step.rhs) = base_rows(true, best_margin);
        for (size_t i = 0; i < fixed.size(); ++i) {
            RatVec row(vars, Rat(0));
            row[i] = 1;
            step.rows.push_back(std::move(row));
            step.rhs.push_back(fixed[i]);
        }
        step.cost.assign(vars, Rat(0));
        step.cost[stage] = 1;
        lp::Solution sol = lp::solve(step);
        if (sol.status != lp::Status::Optimal) throw PropertyCheckError("lexmin program failed");
        fixed.push_back(sol.objective);
    }

    RatVec normal(n);
    for (size_t i = 0; i < n; ++i) normal[i] = fixed[i] - 1;
    normal = primitive_integer_direction(normal);

    Functional m(std::move(normal));
    Rat at_q = dot(m.coefficients(), q.mass());
    Rat at_set = support_min(set, m);
    return Separation{std::move(m), Rat((at_q + at_set) / 2)};
}

Rat hull_distance(const CredalSet& a, const CredalSet& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatchError("hull_distance");
    size_t n = a.dimension();
    size_t k = b.vertices().size();
    Rat worst = 0;
    for (const Prior& point : a.vertices()) {
        // min d  s.t.  |point_i - (B mu)_i| <= d,  mu a convex combination.
        // Variables: mu (k), d, s+ (n), s- (n).
        size_t vars = k + 1 + 2 * n;
        lp::Problem prob;
        for (size_t i = 0; i < n; ++i) {
            RatVec row(vars, Rat(0));
            for (size_t j = 0; j < k; ++j) row[j] = b.vertices()[j][i];
            row[k] = 1;
            row[k + 1 + i] = -1;
            prob.rows.push_back(std::move(row));
            prob.rhs.push_back(point[i]);
        }
        for (size_t i = 0; i < n; ++i) {
            RatVec row(vars, Rat(0));
            for (size_t j = 0; j < k; ++j) row[j] = b.vertices()[j][i];
            row[k] = -1;
            row[k + 1 + n + i] = 1;
            prob.rows.push_back(std::move(row));
            prob.rhs.push_back(point[i]);
        }
        RatVec sum_row(vars, Rat(0));
        for (size_t j = 0; j < k; ++j) sum_row[j] = 1;
        prob.rows.push_back(std::move(sum_row));
        prob.rhs.emplace_back(1);
        prob.cost.assign(vars, Rat(0));
        prob.cost[k] = 1;
        lp::Solution sol = lp::solve(prob);
        if (sol.status != lp::Status::Optimal) throw PropertyCheckError("distance program failed");
        worst = std::max(worst, sol.objective);
    }
    return worst;
}

Prior centroid(const CredalSet& set) {
    RatVec mean(set.dimension(), Rat(0));
    for (const Prior& v : set.vertices())
        for (size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
    for (Rat& c : mean) c /= static_cast<long>(set.vertices().size());
    return Prior(std::move(mean));
}

}  // namespace twofold
