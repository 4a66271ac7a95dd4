#pragma once

#include "twofold/rational.hpp"

namespace twofold {

struct Point2 {
    Rat x;
    Rat y;
    bool operator==(const Point2&) const = default;
};

/// Closed convex polygon as an ordered vertex list. Helpers keep polygons in
/// canonical form: counterclockwise, starting at the lexicographically
/// smallest vertex, no repeated or collinear-interior vertices.
using Polygon2 = std::vector<Point2>;

/// Clips `poly` against the halfplane a*x + b*y >= c (exact). Degenerate
/// results (segment, point, empty) come back as 2-, 1-, or 0-vertex lists.
Polygon2 clip_halfplane(const Polygon2& poly, const Rat& a, const Rat& b, const Rat& c);

/// Convex hull of a 2D point set (monotone chain), counterclockwise,
/// collinear interior points dropped.
Polygon2 convex_hull_2d(std::vector<Point2> points);

/// Rotates to the lexicographically smallest start vertex and enforces
/// counterclockwise orientation. Removes duplicate neighbours.
Polygon2 canonical_polygon(Polygon2 poly);

}  // namespace twofold
