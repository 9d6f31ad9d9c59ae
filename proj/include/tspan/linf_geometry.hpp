#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tspan/rat.hpp"

namespace tspan {

struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(const Rat& s, const Point2& p) { return {s * p.x, s * p.y}; }
};

/// "(x,y)" with exact rational strings.
std::string to_string(const Point2& p);
inline std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << to_string(p); }

enum class Sign : int { Minus = -1, Plus = 1 };

inline Rat operator*(Sign s, const Rat& r) { return s == Sign::Plus ? r : -r; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Closed sector S_axis^sign(p): points whose l-infinity distance from p is
/// attained on `axis` with the given sign.
struct SectorId {
  int axis;  // 1 or 2
  Sign sign;

  friend bool operator==(const SectorId&, const SectorId&) = default;
  friend auto operator<=>(const SectorId&, const SectorId&) = default;

  static std::array<SectorId, 4> all() {
    return {SectorId{1, Sign::Plus}, SectorId{1, Sign::Minus}, SectorId{2, Sign::Plus}, SectorId{2, Sign::Minus}};
  }
};

std::string to_string(SectorId s);

/// Diagonal ray {p + t (sign1, sign2) : t >= 0}.
struct RayId {
  Sign sign1;
  Sign sign2;

  friend bool operator==(const RayId&, const RayId&) = default;
};

Rat linf_distance(const Point2& p, const Point2& q);
Rat l1_distance(const Point2& p, const Point2& q);

bool in_sector(const Point2& p, SectorId s, const Point2& q);
bool in_ray(const Point2& p, RayId r, const Point2& q);

/// True iff u lies on some geodesic from p to q.
bool in_diamond(const Point2& p, const Point2& q, const Point2& u);

/// 45-degree change of coordinates to the l1 plane: (x, y) -> (x + y, y - x).
/// l1 distances of images are twice the l-infinity distances.
Point2 to_l1(const Point2& p);
Point2 from_l1(const Point2& p);
inline constexpr int kL1Scale = 2;

/// Piecewise-linear path parametrized by arc length.
class GeodesicPolyline {
public:
  /// Throws PreconditionViolated unless the segment lengths add up to the
  /// distance between the endpoints.
  static GeodesicPolyline make(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  Rat length() const;
  Point2 point_at(const Rat& t) const;

private:
  explicit GeodesicPolyline(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

/// Arc length of a polyline.
Rat path_length(std::span<const Point2> path);
/// Point at arc length t along a polyline (t clamped to [0, length]).
Point2 path_point_at(std::span<const Point2> path, const Rat& t);
bool is_geodesic_path(std::span<const Point2> path);

/// Smallest arc-length parameter at which the path meets the ray I^{eps,delta}(u).
/// Requires the first vertex in S_1^eps(u) and the last in S_2^delta(u)
/// (PreconditionViolated otherwise). A geodesic always crosses; other paths
/// that do not cross raise PreconditionViolated.
Rat crossing_parameter(const Point2& u, std::span<const Point2> path, Sign eps, Sign delta);
Rat crossing_parameter(const Point2& u, const GeodesicPolyline& g, Sign eps, Sign delta);

/// One of the eight isometries of the l-infinity plane fixing the origin:
/// optional swap of the axes followed by signs on each axis.
struct Symmetry {
  bool swap = false;
  Sign sx = Sign::Plus;
  Sign sy = Sign::Plus;

  Point2 apply(const Point2& p) const;
  Point2 invert(const Point2& p) const;
  SectorId apply(SectorId s) const;
  /// Orientation-reversing symmetries flip polygon winding.
  bool reverses_orientation() const;

  static std::array<Symmetry, 8> all();
};

}  // namespace tspan
