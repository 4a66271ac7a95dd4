#include "twofold/contours.hpp"

#include "twofold/errors.hpp"

namespace twofold {

namespace {

Polygon2 box_polygon(const Box2& box) {
    return {{box.x_min, box.y_min},
            {box.x_max, box.y_min},
            {box.x_max, box.y_max},
            {box.x_min, box.y_max}};
}

}  // namespace

Box2 Box2::standard() { return Box2{Rat(0), Rat(15) / 2, Rat(0), Rat(6)}; }

ContourPolygons contour_polygons(const TfcPreference& pref, const UtilityVector& g,
                                 const Box2& box) {
    if (pref.dimension() != 2) throw DimensionMismatchError("contours need exactly 2 states");
    if (g.dimension() != 2) throw DimensionMismatchError("contours need exactly 2 states");
    if (box.x_min >= box.x_max || box.y_min >= box.y_max)
        throw InvalidArgumentError("degenerate contour box");

    EvaluationInterval at_g = evaluate_interval(pref, g);

    // Upper contour: every vertex p of C contributes <p, u> >= hi(g).
    Polygon2 upper = box_polygon(box);
    for (const Prior& p : pref.lower_set().vertices()) {
        upper = clip_halfplane(upper, p[0], p[1], at_g.hi);
        if (upper.empty()) break;
    }

    // Lower contour: every vertex p of D contributes <p, u> <= lo(g).
    Polygon2 lower = box_polygon(box);
    for (const Prior& p : pref.upper_set().vertices()) {
        lower = clip_halfplane(lower, -p[0], -p[1], -at_g.lo);
        if (lower.empty()) break;
    }

    return ContourPolygons{canonical_polygon(std::move(upper)), canonical_polygon(std::move(lower))};
}

}  // namespace twofold
