#pragma once

#include "twofold/polygon.hpp"
#include "twofold/preferences.hpp"

namespace twofold {

/// Axis-aligned clipping window in utility coordinates.
struct Box2 {
    Rat x_min, x_max, y_min, y_max;
    /// The window the two-state contour figure is drawn in: [0, 15/2] x [0, 6].
    static Box2 standard();
};

struct ContourPolygons {
    Polygon2 upper;  // boundary of { u : min over C of <p,u> >= max over D of <p,g> }
    Polygon2 lower;  // boundary of { u : max over D of <p,u> <= min over C of <p,g> }
};

/// Upper and lower contour regions at act `g` for a two-state preference,
/// clipped to `box`. Polygons are counterclockwise, canonical start vertex,
/// exact rational coordinates. An empty list means the region misses the box.
ContourPolygons contour_polygons(const TfcPreference& pref, const UtilityVector& g,
                                 const Box2& box = Box2::standard());

}  // namespace twofold
