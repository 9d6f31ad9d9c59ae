#include "tspan/detail/convex.hpp"

#include <algorithm>

namespace tspan::detail {

Rat cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Polygon convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<std::pair<Point2, Point2>> edges(const Polygon& poly) {
  std::vector<std::pair<Point2, Point2>> out;
  if (poly.size() == 2) {
    out.emplace_back(poly[0], poly[1]);
  } else if (poly.size() >= 3) {
    for (std::size_t i = 0; i < poly.size(); ++i) out.emplace_back(poly[i], poly[(i + 1) % poly.size()]);
  }
  return out;
}

namespace {

// Left side of the directed line a -> b.
HalfPlane left_of(const Point2& a, const Point2& b) {
  const Point2 d = b - a;
  return {d.y, -d.x, d.y * a.x - d.x * a.y};
}

}  // namespace

std::vector<HalfPlane> half_planes(const Polygon& poly) {
  std::vector<HalfPlane> hs;
  if (poly.size() == 1) {
    const Point2& p = poly[0];
    hs = {{1, 0, p.x}, {-1, 0, -p.x}, {0, 1, p.y}, {0, -1, -p.y}};
  } else if (poly.size() == 2) {
    const Point2& a = poly[0];
    const Point2& b = poly[1];
    const Point2 d = b - a;
    hs = {left_of(a, b), left_of(b, a), {d.x, d.y, d.x * b.x + d.y * b.y}, {-d.x, -d.y, -(d.x * a.x + d.y * a.y)}};
  } else {
    for (const auto& [a, b] : edges(poly)) hs.push_back(left_of(a, b));
  }
  return hs;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  std::vector<Point2> keep;
  bool all_in = true;
  for (const auto& p : poly) {
    if (h.contains(p)) keep.push_back(p);
    else all_in = false;
  }
  if (all_in) return poly;
  for (const auto& [a, b] : edges(poly)) {
    const Rat fa = h.a * a.x + h.b * a.y - h.c;
    const Rat fb = h.a * b.x + h.b * b.y - h.c;
    if (fa.sign() * fb.sign() < 0) {
      const Rat t = fa / (fa - fb);
      keep.push_back(a + t * (b - a));
    }
  }
  return convex_hull(std::move(keep));
}

Polygon clip(Polygon poly, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) {
    if (poly.empty()) break;
    poly = clip(poly, h);
  }
  return poly;
}

Polygon intersect(const Polygon& p, const Polygon& q) {
  if (p.empty() || q.empty()) return {};
  return clip(p, half_planes(q));
}

bool intersects(const Polygon& p, const Polygon& q) { return !intersect(p, q).empty(); }

bool contains(const Polygon& poly, const Point2& p) {
  if (poly.empty()) return false;
  for (const auto& h : half_planes(poly))
    if (!h.contains(p)) return false;
  return true;
}

Rat signed_area2(const Polygon& poly) {
  Rat s;
  for (const auto& [a, b] : edges(poly)) s += a.x * b.y - a.y * b.x;
  return poly.size() >= 3 ? s : Rat(0);
}

std::optional<std::pair<Rat, Rat>> slice_at_y(const Polygon& poly, const Rat& y0) {
  const Polygon c = clip(poly, {{0, 1, y0}, {0, -1, -y0}});
  if (c.empty()) return std::nullopt;
  Rat lo = c.front().x, hi = c.front().x;
  for (const auto& p : c) {
    lo = min(lo, p.x);
    hi = max(hi, p.x);
  }
  return std::make_pair(lo, hi);
}

std::optional<std::pair<Rat, Rat>> slice_at_x(const Polygon& poly, const Rat& x0) {
  const Polygon c = clip(poly, {{1, 0, x0}, {-1, 0, -x0}});
  if (c.empty()) return std::nullopt;
  Rat lo = c.front().y, hi = c.front().y;
  for (const auto& p : c) {
    lo = min(lo, p.y);
    hi = max(hi, p.y);
  }
  return std::make_pair(lo, hi);
}

std::optional<Point2> segment_crossing(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const Point2 r = b - a;
  const Point2 s = d - c;
  const Rat den = r.x * s.y - r.y * s.x;
  if (den.is_zero()) return std::nullopt;
  const Point2 w = c - a;
  const Rat t = (w.x * s.y - w.y * s.x) / den;
  const Rat u = (w.x * r.y - w.y * r.x) / den;
  if (t.sign() < 0 || t > Rat(1) || u.sign() < 0 || u > Rat(1)) return std::nullopt;
  return a + t * r;
}

std::vector<std::pair<Rat, Rat>> merge_intervals(std::vector<std::pair<Rat, Rat>> iv) {
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& i : iv) {
    if (!out.empty() && i.first <= out.back().second) {
      out.back().second = max(out.back().second, i.second);
    } else {
      out.push_back(std::move(i));
    }
  }
  return out;
}

}  // namespace tspan::detail
