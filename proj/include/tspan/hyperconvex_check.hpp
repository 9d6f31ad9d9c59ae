#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tspan/detail/convex.hpp"
#include "tspan/metric_core.hpp"
#include "tspan/region.hpp"

namespace tspan {

/// Closed l-infinity ball, i.e. an axis box.
struct BallN {
  PointN center;
  Rat radius;
};

/// d(c_i, c_j) <= r_i + r_j for every pair. Throws DimensionMismatch.
bool balls_compatible(const std::vector<BallN>& balls);

/// Lower corner of the common box, if the balls share a point. Throws DimensionMismatch.
std::optional<PointN> boxes_intersect(const std::vector<BallN>& balls);

/// Lexicographically smallest point of R inside every (2-dimensional) ball.
std::optional<Point2> region_balls_intersect(const RegionComplex& R, const std::vector<BallN>& balls);

/// The plane L = {x + y + z = 0} is charted by (u, v) -> (u, v, -u-v).
PointN chart_to_space(const Point2& uv);
Point2 space_to_chart(const PointN& p);  // drops z; caller keeps p on L
bool on_plane(const PointN& p);

struct HexagonInPlane {
  std::array<PointN, 6> vertices;  // counterclockwise in chart coordinates

  detail::Polygon chart() const;
};

/// The l-infinity ball of radius r about c, cut by L. Throws CenterOffPlane.
HexagonInPlane plane_hexagon(const PointN& c, const Rat& r);

/// Common part of convex CCW polygons (plane coordinates).
/// Throws DegeneratePolygon for fewer than three vertices or a non-convex input.
detail::Polygon convex_polygon_intersection(const std::vector<detail::Polygon>& polys);
/// Lexicographically smallest vertex of the intersection, if nonempty.
std::optional<Point2> convex_polygon_intersect(const std::vector<detail::Polygon>& polys);

struct HexagonReport {
  std::array<BallN, 3> balls;
  bool compatible = false;
  std::array<std::optional<PointN>, 3> pairwise;  // (0,1), (0,2), (1,2), inside L
  std::optional<PointN> triple;                   // inside L
  std::optional<PointN> triple_in_space;          // ignoring L
};

/// Three pairwise-touching plane hexagons with no common point. `scale`
/// multiplies centers and radii.
HexagonReport hexagon_counterexample(const Rat& scale = Rat(1));

struct Fig25Fixture {
  std::array<PointN, 3> X;  // A, B, C
  std::array<PointN, 4> Y;  // A, M = (1,-1,-1), N = (-1/3,-1/3,1/3), C
  Rat dAB, dAC, dBC;
  Rat dNC, dNA;
  std::array<Rat, 3> legs;  // tripod legs of (X, d)
  bool coplanar = false;
};

Fig25Fixture fig25_fixture();

struct Fig25Witness {
  PointN y, z;
  bool non_tight = false;   // phi(y) is not a tight function
  Rat dy_z, dphi;           // d(y,z) and the sup distance of the images
};

/// Grid search (step 1/steps in the plane chart A + s(M-A) + t(C-A)) for a
/// point with non-tight phi image or a pair contracted by phi.
std::optional<Fig25Witness> fig25_nonisometry_witness(int steps = 4);

}  // namespace tspan
