#pragma once

#include "twofold/rational.hpp"

#include <string>
#include <vector>

namespace twofold {

/// Finite set of state labels; at least two, all distinct.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);
    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
};

/// Probability distribution over states: nonnegative rationals summing to one.
class Prior {
public:
    explicit Prior(RatVec mass);
    const RatVec& mass() const { return mass_; }
    size_t dimension() const { return mass_.size(); }
    const Rat& operator[](size_t i) const { return mass_[i]; }
    bool operator==(const Prior&) const = default;

private:
    RatVec mass_;
};

/// Linear functional on the simplex: direction vectors, utility rows, and
/// separating normals all live here.
class Functional {
public:
    explicit Functional(RatVec coefficients);
    const RatVec& coefficients() const { return coefficients_; }
    size_t dimension() const { return coefficients_.size(); }
    const Rat& operator[](size_t i) const { return coefficients_[i]; }
    bool operator==(const Functional&) const = default;

private:
    RatVec coefficients_;
};

/// Constraint <normal, p> >= offset, intersected with the simplex.
struct Halfspace {
    RatVec normal;
    Rat offset;
};

/// Convex polytope of priors, vertex representation canonical: vertices are
/// deduplicated, irredundant (no vertex inside the hull of the others), and
/// sorted lexicographically, so equal hulls have identical vertex lists.
/// Immutable after construction.
class CredalSet {
public:
    explicit CredalSet(std::vector<Prior> vertices);
    static CredalSet singleton(Prior p);

    /// Vertex-enumerates the intersection of the simplex with the given
    /// halfspaces. Throws InvalidArgumentError when the intersection is empty.
    static CredalSet from_halfspaces(size_t dimension, const std::vector<Halfspace>& halfspaces);

    const std::vector<Prior>& vertices() const { return vertices_; }
    size_t dimension() const { return vertices_.front().dimension(); }
    bool is_singleton() const { return vertices_.size() == 1; }

    /// Facet description derived from the vertices (dimensions 2 and 3 only;
    /// that is all the contour and reporting paths ever need).
    std::vector<Halfspace> halfspaces() const;

    bool operator==(const CredalSet&) const = default;

private:
    CredalSet() = default;
    std::vector<Prior> vertices_;
};

/// min over the set of <xi, p>; attained at a vertex.
Rat support_min(const CredalSet& set, const Functional& xi);
/// max over the set of <xi, p>.
Rat support_max(const CredalSet& set, const Functional& xi);

/// Exact hull membership, decided by rational feasibility of the
/// convex-combination system.
bool contains(const CredalSet& set, const Prior& q);

/// Whether the two hulls share a point (paired convex-combination system).
bool intersects(const CredalSet& a, const CredalSet& b);

/// inner subseteq outer; reduces to vertex membership by convexity.
bool subset(const CredalSet& inner, const CredalSet& outer);

bool same_hull(const CredalSet& a, const CredalSet& b);

/// Strictly separating functional for a point outside the set:
/// <normal, q> < threshold < <normal, p> for every p in the set.
/// The normal is the lexicographically smallest primitive integer vector
/// among maximum-margin separators (sup-norm box normalization); the
/// threshold is the midpoint of the separation gap. Deterministic.
struct Separation {
    Functional normal;
    Rat threshold;
};
Separation separating_functional(const CredalSet& set, const Prior& q);

/// Directed Hausdorff distance: max over vertices of `a` of the
/// sup-norm distance to the hull of `b`. Zero iff subset(a, b).
Rat hull_distance(const CredalSet& a, const CredalSet& b);

/// Arithmetic mean of the vertices; a convenient interior point.
Prior centroid(const CredalSet& set);

}  // namespace twofold
