#pragma once

// Exact convex-set kernel shared by the region, retraction and hyperconvexity
// code. A convex feature is its vertex list: one vertex (a point), two (a
// segment, endpoints sorted) or three or more (a polygon, counterclockwise,
// starting at the lexicographically smallest vertex, no collinear vertices).

#include <optional>
#include <utility>
#include <vector>

#include "tspan/linf_geometry.hpp"

namespace tspan::detail {

using Polygon = std::vector<Point2>;

/// Closed half-plane a*x + b*y <= c.
struct HalfPlane {
  Rat a, b, c;
  bool contains(const Point2& p) const { return a * p.x + b * p.y <= c; }
};

/// (a - o) x (b - o)
Rat cross(const Point2& o, const Point2& a, const Point2& b);

/// Convex hull in the normal form described above. Empty input gives empty output.
Polygon convex_hull(std::vector<Point2> pts);

/// Half-plane description of a convex feature (points and segments included).
std::vector<HalfPlane> half_planes(const Polygon& poly);

/// Edges as vertex pairs: none for a point, one for a segment, cyclic otherwise.
std::vector<std::pair<Point2, Point2>> edges(const Polygon& poly);

Polygon clip(const Polygon& poly, const HalfPlane& h);
Polygon clip(Polygon poly, const std::vector<HalfPlane>& hs);

/// Intersection of two convex features (empty polygon if disjoint).
Polygon intersect(const Polygon& p, const Polygon& q);
bool intersects(const Polygon& p, const Polygon& q);
bool contains(const Polygon& poly, const Point2& p);

/// Twice the signed area; positive for counterclockwise polygons.
Rat signed_area2(const Polygon& poly);

/// x-range of the feature on the horizontal line y = y0.
std::optional<std::pair<Rat, Rat>> slice_at_y(const Polygon& poly, const Rat& y0);
/// y-range of the feature on the vertical line x = x0.
std::optional<std::pair<Rat, Rat>> slice_at_x(const Polygon& poly, const Rat& x0);

/// Intersection point of two non-parallel closed segments, if they meet.
/// Parallel pairs return nothing (their contacts are endpoints anyway).
std::optional<Point2> segment_crossing(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Sorted union of closed intervals, touching intervals merged.
std::vector<std::pair<Rat, Rat>> merge_intervals(std::vector<std::pair<Rat, Rat>> iv);

}  // namespace tspan::detail
