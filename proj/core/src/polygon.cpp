#include "twofold/polygon.hpp"

#include <algorithm>

namespace twofold {

namespace {

bool lex_less(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Rat cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Polygon2 dedupe_consecutive(Polygon2 poly) {
    Polygon2 out;
    for (const Point2& p : poly) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

}  // namespace

Polygon2 clip_halfplane(const Polygon2& poly, const Rat& a, const Rat& b, const Rat& c) {
    if (poly.empty()) return {};
    Polygon2 out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& cur = poly[i];
        const Point2& nxt = poly[(i + 1) % n];
        Rat side_cur = a * cur.x + b * cur.y - c;
        Rat side_nxt = a * nxt.x + b * nxt.y - c;
        if (side_cur >= 0) out.push_back(cur);
        if ((side_cur > 0 && side_nxt < 0) || (side_cur < 0 && side_nxt > 0)) {
            Rat t = side_cur / (side_cur - side_nxt);
            out.push_back(Point2{cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return dedupe_consecutive(out);
}

Polygon2 convex_hull_2d(std::vector<Point2> points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    size_t n = points.size();
    if (n <= 2) return points;

    Polygon2 hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    for (size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

Polygon2 canonical_polygon(Polygon2 poly) {
    poly = dedupe_consecutive(std::move(poly));
    if (poly.size() < 3) {
        std::sort(poly.begin(), poly.end(), lex_less);
        return poly;
    }
    // Signed area; reverse clockwise input.
    Rat area2 = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        area2 += p.x * q.y - q.x * p.y;
    }
    if (area2 < 0) std::reverse(poly.begin(), poly.end());

    size_t start = 0;
    for (size_t i = 1; i < n; ++i)
        if (lex_less(poly[i], poly[start])) start = i;
    std::rotate(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(start), poly.end());
    return poly;
}

}  // namespace twofold
