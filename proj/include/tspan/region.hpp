#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tspan/detail/convex.hpp"
#include "tspan/linf_geometry.hpp"

namespace tspan {

struct Segment {
  Point2 a;
  Point2 b;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

using Cell = detail::Polygon;

/// Closed planar set: isolated points, segments and convex cells whose edges
/// run at 0, 45, 90 or 135 degrees. Always held in canonical form:
///  - cells CCW from their smallest vertex, interiors pairwise disjoint;
///  - segments (a < b) maximal along their line and not inside any cell;
///  - points not on any segment or cell;
///  - each list sorted.
class RegionComplex {
public:
  RegionComplex() = default;

  /// Validates and canonicalizes. Overlapping cells are cut into disjoint
  /// convex pieces. Throws Error(InvalidRegion) on a bad direction or a
  /// non-convex / degenerate cell.
  static RegionComplex make(std::vector<Point2> points, std::vector<Segment> segments, std::vector<Cell> cells);

  /// Builds from convex features of any dimension: each vertex list is
  /// replaced by its convex hull and classified as point, segment or cell.
  static RegionComplex from_features(const std::vector<detail::Polygon>& features);

  const std::vector<Point2>& points() const { return points_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool empty() const { return points_.empty() && segments_.empty() && cells_.empty(); }
  std::size_t feature_count() const { return points_.size() + segments_.size() + cells_.size(); }

  /// Points, then segments, then cells, as convex vertex lists.
  std::vector<detail::Polygon> features() const;

  /// Feature vertices plus all crossings between feature edges, sorted.
  std::vector<Point2> vertices() const;

  bool contains(const Point2& p) const;

  friend bool operator==(const RegionComplex&, const RegionComplex&) = default;

private:
  std::vector<Point2> points_;
  std::vector<Segment> segments_;
  std::vector<Cell> cells_;
};

/// Closure of the set of points all four of whose closed quadrants (in the
/// rotated l1 coordinates) meet to_l1(X). Throws PreconditionViolated on empty X.
RegionComplex orthogonal_hull(const std::vector<Point2>& X);

/// Maximal connected pieces (touching at a single point counts as connected),
/// ordered by their first feature.
std::vector<RegionComplex> components(const RegionComplex& R);

struct ConvexityReport {
  bool convex = true;
  /// Two points of R with no geodesic between them inside R.
  std::optional<std::pair<Point2, Point2>> witness;
};

/// Decides whether every two points of R are joined by an l-infinity geodesic
/// inside R: R must be connected and every axis-parallel line in l1
/// coordinates must meet it in a connected set.
ConvexityReport is_geodesically_convex(const RegionComplex& R);

struct GchResult {
  RegionComplex region;
  RegionComplex hull;
  /// Staircase pieces added between consecutive hull components.
  std::vector<Segment> bridges;
};

/// Smallest closed geodesically convex set containing X: orthogonal hull plus
/// one staircase bridge between each pair of consecutive hull components.
GchResult minimal_gch_detailed(const std::vector<Point2>& X);
RegionComplex minimal_gch(const std::vector<Point2>& X);

/// n seeded points of R. The first min(n, #features) samples cover the
/// features in order (relative interiors of segments and cells).
/// Throws EmptyRegion.
std::vector<Point2> sample_points(const RegionComplex& R, std::size_t n, std::uint64_t seed);

/// A geodesic path from p to q inside R as a polyline, or nothing if there is
/// none. Throws PreconditionViolated when p or q is outside R.
std::optional<std::vector<Point2>> find_geodesic(const RegionComplex& R, const Point2& p, const Point2& q);

/// A point m of R with d(p,m) = d(m,q) = d(p,q)/2, if a geodesic exists.
std::optional<Point2> geodesic_midpoint(const RegionComplex& R, const Point2& p, const Point2& q);

}  // namespace tspan
