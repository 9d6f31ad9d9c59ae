#include "tspan/hyperconvex_check.hpp"

#include <algorithm>

#include "tspan/error.hpp"
#include "tspan/tight_span.hpp"

namespace tspan {

using detail::Polygon;

namespace {

std::size_t common_dimension(const std::vector<BallN>& balls) {
  if (balls.empty()) return 0;
  const std::size_t n = balls[0].center.size();
  for (const auto& b : balls)
    if (b.center.size() != n || n == 0) throw Error(ErrorCode::DimensionMismatch, "balls of different dimensions");
  return n;
}

// Common box [lo, hi], or nothing.
std::optional<std::pair<PointN, PointN>> common_box(const std::vector<BallN>& balls) {
  const std::size_t n = common_dimension(balls);
  if (balls.empty()) return std::nullopt;
  PointN lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = balls[0].center[k] - balls[0].radius;
    hi[k] = balls[0].center[k] + balls[0].radius;
    for (const auto& b : balls) {
      lo[k] = max(lo[k], b.center[k] - b.radius);
      hi[k] = min(hi[k], b.center[k] + b.radius);
    }
    if (lo[k] > hi[k]) return std::nullopt;
  }
  return std::make_pair(std::move(lo), std::move(hi));
}

const std::array<std::array<int, 3>, 6> kUnitHexagon{{{1, 0, -1}, {0, 1, -1}, {-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}, {1, -1, 0}}};

}  // namespace

bool balls_compatible(const std::vector<BallN>& balls) {
  common_dimension(balls);
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (linf_distance(balls[i].center, balls[j].center) > balls[i].radius + balls[j].radius) return false;
  return true;
}

std::optional<PointN> boxes_intersect(const std::vector<BallN>& balls) {
  auto box = common_box(balls);
  if (!box) return std::nullopt;
  return box->first;
}

std::optional<Point2> region_balls_intersect(const RegionComplex& R, const std::vector<BallN>& balls) {
  if (common_dimension(balls) != 2 && !balls.empty()) throw Error(ErrorCode::DimensionMismatch, "region balls must be planar");
  std::vector<detail::HalfPlane> hs;
  if (!balls.empty()) {
    auto box = common_box(balls);
    if (!box) return std::nullopt;
    const auto& [lo, hi] = *box;
    hs = {{-1, 0, -lo[0]}, {1, 0, hi[0]}, {0, -1, -lo[1]}, {0, 1, hi[1]}};
  }
  std::optional<Point2> best;
  for (const auto& f : R.features()) {
    const Polygon c = detail::clip(f, hs);
    for (const auto& p : c)
      if (!best || p < *best) best = p;
  }
  return best;
}

PointN chart_to_space(const Point2& uv) { return {uv.x, uv.y, -uv.x - uv.y}; }
Point2 space_to_chart(const PointN& p) { return {p.at(0), p.at(1)}; }
bool on_plane(const PointN& p) { return p.size() == 3 && (p[0] + p[1] + p[2]).is_zero(); }

Polygon HexagonInPlane::chart() const {
  Polygon out;
  for (const auto& v : vertices) out.push_back(space_to_chart(v));
  return detail::convex_hull(out);
}

HexagonInPlane plane_hexagon(const PointN& c, const Rat& r) {
  if (!on_plane(c)) throw Error(ErrorCode::CenterOffPlane, "hexagon center must satisfy x + y + z = 0");
  if (r.sign() < 0) throw Error(ErrorCode::PreconditionViolated, "negative radius");
  HexagonInPlane h;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 3; ++k) h.vertices[i].push_back(c[k] + r * Rat(kUnitHexagon[i][k]));
  return h;
}

Polygon convex_polygon_intersection(const std::vector<Polygon>& polys) {
  if (polys.empty()) return {};
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Polygon& p = polys[i];
    const Polygon h = detail::convex_hull(p);
    if (p.size() < 3 || h.size() != p.size() || detail::signed_area2(p).sign() <= 0)
      throw Error(ErrorCode::DegeneratePolygon, "polygon " + std::to_string(i) + " is not a convex CCW polygon", {i});
  }
  Polygon acc = detail::convex_hull(polys[0]);
  for (std::size_t i = 1; i < polys.size() && !acc.empty(); ++i) acc = detail::intersect(acc, polys[i]);
  return acc;
}

std::optional<Point2> convex_polygon_intersect(const std::vector<Polygon>& polys) {
  const Polygon acc = convex_polygon_intersection(polys);
  if (acc.empty()) return std::nullopt;
  return *std::min_element(acc.begin(), acc.end());
}

HexagonReport hexagon_counterexample(const Rat& scale) {
  if (scale.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "scale must be positive");
  HexagonReport rep;
  const std::array<PointN, 3> centers{PointN{2, -1, -1}, PointN{-1, 2, -1}, PointN{-1, -1, 2}};
  std::array<Polygon, 3> hex;
  for (std::size_t i = 0; i < 3; ++i) {
    PointN c;
    for (const auto& x : centers[i]) c.push_back(scale * x);
    rep.balls[i] = BallN{c, scale * Rat(3, 2)};
    hex[i] = plane_hexagon(rep.balls[i].center, rep.balls[i].radius).chart();
  }
  rep.compatible = balls_compatible({rep.balls.begin(), rep.balls.end()});
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    auto w = convex_polygon_intersect({hex[pairs[k].first], hex[pairs[k].second]});
    if (w) rep.pairwise[k] = chart_to_space(*w);
  }
  if (auto w = convex_polygon_intersect({hex[0], hex[1], hex[2]})) rep.triple = chart_to_space(*w);
  rep.triple_in_space = boxes_intersect({rep.balls.begin(), rep.balls.end()});
  return rep;
}

namespace {

PointN affine(const PointN& o, const PointN& u, const PointN& v, const Rat& s, const Rat& t) {
  PointN p(3);
  for (std::size_t k = 0; k < 3; ++k) p[k] = o[k] + s * (u[k] - o[k]) + t * (v[k] - o[k]);
  return p;
}

Rat det3(const PointN& a, const PointN& b, const PointN& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

PointN minus(const PointN& a, const PointN& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace

Fig25Fixture fig25_fixture() {
  Fig25Fixture fx;
  const PointN A{1, 1, 1}, B{1, -2, -2}, C{-1, 0, 1};
  const PointN M{1, -1, -1}, N{Rat(-1, 3), Rat(-1, 3), Rat(1, 3)};
  fx.X = {A, B, C};
  fx.Y = {A, M, N, C};
  fx.dAB = linf_distance(A, B);
  fx.dAC = linf_distance(A, C);
  fx.dBC = linf_distance(B, C);
  fx.dNC = linf_distance(N, C);
  fx.dNA = linf_distance(N, A);
  const TripodModel t = tripod_span(fx.dBC, fx.dAC, fx.dAB);  // roles: a = d(2,3), b = d(1,3), c = d(1,2)
  fx.legs = t.legs;
  fx.coplanar = det3(minus(M, A), minus(N, A), minus(C, A)).is_zero();
  return fx;
}

std::optional<Fig25Witness> fig25_nonisometry_witness(int steps) {
  const Fig25Fixture fx = fig25_fixture();
  const std::vector<PointN> xs(fx.X.begin(), fx.X.end());
  const FiniteMetric M = linf_metric({"A", "B", "C"}, xs);
  const PointN& A = fx.Y[0];
  const PointN& Mv = fx.Y[1];
  const PointN& C = fx.Y[3];
  const PointN& B = fx.X[1];

  // Y is the triangle A, M, C (N sits on its edge MC) together with [B, M].
  std::vector<PointN> pts;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; i + j <= steps; ++j) pts.push_back(affine(A, Mv, C, Rat(i, steps), Rat(j, steps)));
  for (int i = 1; i < steps; ++i) pts.push_back(affine(B, Mv, Mv, Rat(i, steps), Rat(0)));

  std::vector<TightFunction> img;
  for (const auto& y : pts) {
    img.push_back(phi_map(M, xs, y));
    if (!is_tight_point(M, img.back().values)) {
      Fig25Witness w{y, y, true, Rat(0), Rat(0)};
      return w;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Rat d = linf_distance(pts[i], pts[j]);
      const Rat dp = tspan_distance(img[i], img[j]);
      if (dp < d) return Fig25Witness{pts[i], pts[j], false, d, dp};
    }
  return std::nullopt;
}

}  // namespace tspan
