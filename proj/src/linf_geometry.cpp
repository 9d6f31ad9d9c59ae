#include "tspan/linf_geometry.hpp"

#include "tspan/error.hpp"

namespace tspan {

std::string to_string(const Point2& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::string to_string(SectorId s) {
  return std::string("S") + (s.axis == 1 ? "1" : "2") + sign_char(s.sign);
}

Rat linf_distance(const Point2& p, const Point2& q) { return max((p.x - q.x).abs(), (p.y - q.y).abs()); }

Rat l1_distance(const Point2& p, const Point2& q) { return (p.x - q.x).abs() + (p.y - q.y).abs(); }

bool in_sector(const Point2& p, SectorId s, const Point2& q) {
  const Rat along = s.axis == 1 ? q.x - p.x : q.y - p.y;
  return linf_distance(p, q) == s.sign * along;
}

bool in_ray(const Point2& p, RayId r, const Point2& q) {
  const Rat dx = r.sign1 * (q.x - p.x);
  const Rat dy = r.sign2 * (q.y - p.y);
  return dx == dy && dx.sign() >= 0;
}

bool in_diamond(const Point2& p, const Point2& q, const Point2& u) {
  return linf_distance(p, u) + linf_distance(u, q) == linf_distance(p, q);
}

Point2 to_l1(const Point2& p) { return {p.x + p.y, p.y - p.x}; }

Point2 from_l1(const Point2& p) {
  const Rat half(1, 2);
  return {half * (p.x - p.y), half * (p.x + p.y)};
}

Rat path_length(std::span<const Point2> path) {
  Rat total;
  for (std::size_t i = 1; i < path.size(); ++i) total += linf_distance(path[i - 1], path[i]);
  return total;
}

bool is_geodesic_path(std::span<const Point2> path) {
  return !path.empty() && path_length(path) == linf_distance(path.front(), path.back());
}

Point2 path_point_at(std::span<const Point2> path, const Rat& t) {
  if (path.empty()) throw Error(ErrorCode::PreconditionViolated, "empty path");
  Rat remaining = t;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Rat len = linf_distance(path[i - 1], path[i]);
    if (remaining <= len) {
      if (len.is_zero()) return path[i - 1];
      return path[i - 1] + (remaining / len) * (path[i] - path[i - 1]);
    }
    remaining -= len;
  }
  return path.back();
}

GeodesicPolyline GeodesicPolyline::make(std::vector<Point2> vertices) {
  if (vertices.size() < 2) throw Error(ErrorCode::PreconditionViolated, "a geodesic needs at least two vertices");
  if (!is_geodesic_path(vertices)) {
    throw Error(ErrorCode::PreconditionViolated, "segment lengths do not add up to the endpoint distance");
  }
  return GeodesicPolyline(std::move(vertices));
}

Rat GeodesicPolyline::length() const { return linf_distance(vertices_.front(), vertices_.back()); }

Point2 GeodesicPolyline::point_at(const Rat& t) const { return path_point_at(vertices_, t); }

Rat crossing_parameter(const Point2& u, std::span<const Point2> path, Sign eps, Sign delta) {
  if (path.size() < 2) throw Error(ErrorCode::PreconditionViolated, "path needs two vertices");
  if (!in_sector(u, SectorId{1, eps}, path.front()) || !in_sector(u, SectorId{2, delta}, path.back())) {
    throw Error(ErrorCode::PreconditionViolated, "path endpoints are not in the stated sectors");
  }
  // On segment a + s (b - a): along(s) = eps (x - u.x) and off(s) = along - delta (y - u.y);
  // the ray is {off = 0, along >= 0}.
  Rat start;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Point2& a = path[i - 1];
    const Point2& b = path[i];
    const Rat len = linf_distance(a, b);
    const Rat along_a = eps * (a.x - u.x);
    const Rat along_b = eps * (b.x - u.x);
    const Rat off_a = along_a - delta * (a.y - u.y);
    const Rat off_b = along_b - delta * (b.y - u.y);
    std::optional<Rat> s;
    if (off_a.is_zero() && off_b.is_zero()) {
      if (along_a.sign() >= 0) {
        s = Rat(0);
      } else if (along_b.sign() >= 0) {
        s = along_a / (along_a - along_b);
      }
    } else if (off_a.sign() * off_b.sign() <= 0) {
      Rat root = off_a / (off_a - off_b);
      if ((along_a + root * (along_b - along_a)).sign() >= 0) s = std::move(root);
    }
    if (s) return start + *s * len;
    start += len;
  }
  throw Error(ErrorCode::PreconditionViolated, "path never meets the ray");
}

Rat crossing_parameter(const Point2& u, const GeodesicPolyline& g, Sign eps, Sign delta) {
  return crossing_parameter(u, std::span<const Point2>(g.vertices()), eps, delta);
}

Point2 Symmetry::apply(const Point2& p) const {
  const Rat& a = swap ? p.y : p.x;
  const Rat& b = swap ? p.x : p.y;
  return {sx * a, sy * b};
}

Point2 Symmetry::invert(const Point2& p) const {
  const Rat a = sx * p.x;
  const Rat b = sy * p.y;
  return swap ? Point2{b, a} : Point2{a, b};
}

SectorId Symmetry::apply(SectorId s) const {
  const int axis = swap ? 3 - s.axis : s.axis;
  const Sign axis_sign = axis == 1 ? sx : sy;
  const Sign sign = axis_sign == Sign::Plus ? s.sign : flip(s.sign);
  return {axis, sign};
}

bool Symmetry::reverses_orientation() const {
  int parity = (swap ? 1 : 0) + (sx == Sign::Minus ? 1 : 0) + (sy == Sign::Minus ? 1 : 0);
  return parity % 2 == 1;
}

std::array<Symmetry, 8> Symmetry::all() {
  std::array<Symmetry, 8> out{};
  std::size_t k = 0;
  for (bool swap : {false, true})
    for (Sign sx : {Sign::Plus, Sign::Minus})
      for (Sign sy : {Sign::Plus, Sign::Minus}) out[k++] = Symmetry{swap, sx, sy};
  return out;
}

}  // namespace tspan
