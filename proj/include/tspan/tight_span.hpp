#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tspan/linf_geometry.hpp"
#include "tspan/metric_core.hpp"
#include "tspan/region.hpp"

namespace tspan {

/// A candidate point of T(X): one nonnegative value per label of `base`.
/// Holds a non-owning pointer; the metric must outlive the function.
struct TightFunction {
  const FiniteMetric* base = nullptr;
  std::vector<Rat> values;
};

/// f = d(x, .). Throws UnknownLabel.
TightFunction kuratowski(const FiniteMetric& M, std::string_view x);

/// gap[x][y] = f(x) + f(y) - d(x, y). Throws LengthMismatch.
std::vector<std::vector<Rat>> gap_table(const FiniteMetric& M, const std::vector<Rat>& f);

/// f(x) + f(y) >= d(x, y) for all pairs and f >= 0.
bool is_feasible(const FiniteMetric& M, const std::vector<Rat>& f);

/// Feasible, and every row of the gap table has minimum 0. Throws LengthMismatch.
bool is_tight_point(const FiniteMetric& M, const std::vector<Rat>& f);

/// sup-distance. Throws BaseMismatch.
Rat tspan_distance(const TightFunction& f, const TightFunction& g);

/// Round-robin descent in label order: g(x) <- max(0, max_{y != x} d(x,y) - g(y))
/// until a full pass changes nothing. `passes` receives the number of passes
/// including the final quiet one. Throws InfeasibleInput.
TightFunction descend_to_tight(const FiniteMetric& M, std::vector<Rat> f, std::size_t* passes = nullptr);

/// Points p1, p2, p3 with d(p2,p3) = a, d(p1,p3) = b, d(p1,p2) = c, placed by
/// the template p2 = (0,0), p1 = (0,c), p3 = (b,a) (labels 1 and 2 swapped
/// internally when a < b). Returned in label order p1, p2, p3.
std::array<Point2, 3> embed3(const Rat& a, const Rat& b, const Rat& c);

/// Maps a..f (= d23, d13, d12, d14, d24, d34) to points p1..p4. The labels
/// are renamed internally until c+f <= b+e <= a+d, the template
/// p2 = (0,0), p1 = (e-d,c), p3 = (b+e-d,a), p4 = (e,a-f) applied, and all six
/// distances re-checked (EmbeddingInfeasible names the failing pair).
std::array<Point2, 4> embed4(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f);

/// Distances of a 4-point space, in a..f role order.
struct QuadDistances {
  Rat a, b, c, d, e, f;
};

/// The relabeling used by embed4/quad_span: perm[i] is the original index
/// (0-based) of canonical point i+1; the distances are in canonical labels.
struct QuadCanonical {
  std::array<std::size_t, 4> perm;
  QuadDistances dist;
};
QuadCanonical canonical_quad(const QuadDistances& q);

struct TripodModel {
  std::array<Rat, 3> legs;  // from the branch point to P1, P2, P3
  std::array<std::string, 3> labels{"P1", "P2", "P3"};
};

/// Legs (b+c-a)/2, (a+c-b)/2, (a+b-c)/2. Throws TriangleViolation.
TripodModel tripod_span(const Rat& a, const Rat& b, const Rat& c);

/// Rectangle with four legs. In canonical labels the lengths are, in order:
/// P2 leg (c+e-d)/2, rectangle side (a+d-c-f)/2, P4 leg (e+f-a)/2,
/// rectangle side (a+d-b-e)/2, P3 leg (b+f-d)/2, P1 leg (b+c-a)/2.
struct QuadModel {
  std::array<Rat, 6> lengths;
  Rat width;
  Rat height;
  std::array<std::size_t, 4> perm;  // canonical point i+1 is input point perm[i]+1
};

/// Throws TriangleViolation, NegativeLength.
QuadModel quad_span(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f);

/// A model laid out in the plane before canonicalization: the branch point
/// or rectangle, and one leg per label (original order, attach point first).
/// Collinear legs stay separate here; the region merges them.
struct ModelLayout {
  RegionComplex core;
  std::vector<Segment> legs;
};
ModelLayout tripod_layout(const TripodModel& m);
ModelLayout quad_layout(const QuadModel& m);

/// The models drawn as plane regions (legs at 45 degrees). Tips are returned
/// in original label order.
RegionComplex tripod_region(const TripodModel& m, std::array<Point2, 3>* tips = nullptr);
RegionComplex quad_region(const QuadModel& m, std::array<Point2, 4>* tips = nullptr);

/// y -> d(y, .) restricted to X. Throws MetricMismatch when M is not the
/// l-infinity metric of X_points (in order).
TightFunction phi_map(const FiniteMetric& M, const std::vector<Point2>& X_points, const Point2& y);
TightFunction phi_map(const FiniteMetric& M, const std::vector<PointN>& X_points, const PointN& y);

struct IsometryReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::size_t points_checked = 0;
  std::optional<Point2> y, z;  // witness
  std::string failed_check;    // "tight" or "distance"
};

/// Checks that phi is tight on every vertex and sample of Y and preserves
/// distance on all vertex pairs plus n_pairs seeded pairs. Throws
/// ContainmentViolation when some x is outside Y.
IsometryReport check_isometry(const RegionComplex& Y, const std::vector<Point2>& X_points, std::size_t n_pairs,
                              std::uint64_t seed);

}  // namespace tspan
