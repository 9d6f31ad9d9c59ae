#include "tspan/region.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "tspan/error.hpp"

namespace tspan {

using detail::Polygon;

namespace {

bool allowed_direction(const Point2& a, const Point2& b) {
  const Rat dx = b.x - a.x;
  const Rat dy = b.y - a.y;
  return dx.is_zero() || dy.is_zero() || dx.abs() == dy.abs();
}

void require_direction(const Point2& a, const Point2& b) {
  if (!allowed_direction(a, b)) {
    throw Error(ErrorCode::InvalidRegion, "edge " + to_string(a) + "-" + to_string(b) + " is not at a multiple of 45 degrees");
  }
}

Cell normalize_cell(const Cell& raw) {
  Cell hull = detail::convex_hull(raw);
  if (hull.size() < 3) throw Error(ErrorCode::InvalidRegion, "degenerate cell");

  // The input, minus repeated and collinear vertices, must walk the hull.
  std::vector<Point2> v;
  for (const auto& p : raw)
    if (v.empty() || v.back() != p) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  std::vector<Point2> corners;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& prev = v[(i + v.size() - 1) % v.size()];
    const Point2& next = v[(i + 1) % v.size()];
    if (!detail::cross(prev, v[i], next).is_zero()) corners.push_back(v[i]);
  }
  bool convex = false;
  if (corners.size() == hull.size()) {
    const auto it = std::find(corners.begin(), corners.end(), hull[0]);
    if (it != corners.end()) {
      const std::size_t n = hull.size();
      const std::size_t s = static_cast<std::size_t>(it - corners.begin());
      bool fwd = true, bwd = true;
      for (std::size_t i = 0; i < n; ++i) {
        fwd = fwd && corners[(s + i) % n] == hull[i];
        bwd = bwd && corners[(s + n - i) % n] == hull[i];
      }
      convex = fwd || bwd;
    }
  }
  if (!convex) throw Error(ErrorCode::InvalidRegion, "cell is not a convex polygon");
  for (const auto& [a, b] : detail::edges(hull)) require_direction(a, b);
  return hull;
}

// Closure of b minus a, as convex pieces with disjoint interiors.
std::vector<Cell> subtract_cell(const Cell& b, const Cell& a) {
  if (detail::signed_area2(detail::intersect(b, a)).sign() <= 0) return {b};
  std::vector<Cell> out;
  const auto hs = detail::half_planes(a);
  Polygon rest = b;
  for (const auto& h : hs) {
    Polygon piece = detail::clip(rest, detail::HalfPlane{-h.a, -h.b, -h.c});
    if (detail::signed_area2(piece).sign() > 0) out.push_back(std::move(piece));
    rest = detail::clip(rest, h);
    if (rest.empty()) break;
  }
  return out;
}

// Line through a segment: direction class, offset and coordinate along it.
struct LineKey {
  int kind;  // 0: horizontal, 1: vertical, 2: slope +1, 3: slope -1
  Rat offset;
  friend bool operator<(const LineKey& l, const LineKey& r) {
    return l.kind != r.kind ? l.kind < r.kind : l.offset < r.offset;
  }
};

LineKey line_key(const Point2& a, const Point2& b) {
  const Rat dx = b.x - a.x;
  const Rat dy = b.y - a.y;
  if (dy.is_zero()) return {0, a.y};
  if (dx.is_zero()) return {1, a.x};
  if (dx == dy) return {2, a.y - a.x};
  return {3, a.x + a.y};
}

Rat along(const LineKey& k, const Point2& p) { return k.kind == 1 ? p.y : p.x; }

Point2 on_line(const LineKey& k, const Rat& t) {
  switch (k.kind) {
    case 0: return {t, k.offset};
    case 1: return {k.offset, t};
    case 2: return {t, t + k.offset};
    default: return {t, k.offset - t};
  }
}

// Parts of segment (a,b) not covered by any cell, as parameter intervals.
std::vector<Segment> uncovered_parts(const Segment& s, const std::vector<Cell>& cells) {
  const LineKey key = line_key(s.a, s.b);
  const Rat t0 = along(key, s.a), t1 = along(key, s.b);
  std::vector<std::pair<Rat, Rat>> covered;
  for (const auto& c : cells) {
    const Polygon hit = detail::intersect(Polygon{s.a, s.b}, c);
    if (hit.size() == 2) covered.emplace_back(along(key, hit[0]), along(key, hit[1]));
  }
  covered = detail::merge_intervals(std::move(covered));
  std::vector<Segment> out;
  Rat cur = t0;
  for (const auto& [lo, hi] : covered) {
    if (cur < lo) out.push_back({on_line(key, cur), on_line(key, lo)});
    cur = max(cur, hi);
  }
  if (cur < t1) out.push_back({on_line(key, cur), on_line(key, t1)});
  return out;
}

}  // namespace

RegionComplex RegionComplex::make(std::vector<Point2> points, std::vector<Segment> segments, std::vector<Cell> cells) {
  RegionComplex r;

  for (const auto& raw : cells) {
    std::vector<Cell> pieces{normalize_cell(raw)};
    for (const auto& prior : r.cells_) {
      std::vector<Cell> next;
      for (const auto& piece : pieces)
        for (auto& rest : subtract_cell(piece, prior)) next.push_back(std::move(rest));
      pieces = std::move(next);
    }
    for (auto& piece : pieces) r.cells_.push_back(std::move(piece));
  }

  std::map<LineKey, std::vector<std::pair<Rat, Rat>>> runs;
  for (auto s : segments) {
    if (s.a == s.b) {
      points.push_back(s.a);
      continue;
    }
    require_direction(s.a, s.b);
    if (s.b < s.a) std::swap(s.a, s.b);
    for (const auto& part : uncovered_parts(s, r.cells_)) {
      const LineKey key = line_key(part.a, part.b);
      runs[key].emplace_back(along(key, part.a), along(key, part.b));
    }
  }
  for (auto& [key, iv] : runs)
    for (const auto& [lo, hi] : detail::merge_intervals(std::move(iv))) r.segments_.push_back({on_line(key, lo), on_line(key, hi)});

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    bool covered = false;
    for (const auto& s : r.segments_) covered = covered || detail::contains(Polygon{s.a, s.b}, p);
    for (const auto& c : r.cells_) covered = covered || detail::contains(c, p);
    if (!covered) r.points_.push_back(p);
  }

  std::sort(r.segments_.begin(), r.segments_.end());
  std::sort(r.cells_.begin(), r.cells_.end());
  return r;
}

RegionComplex RegionComplex::from_features(const std::vector<Polygon>& features) {
  std::vector<Point2> points;
  std::vector<Segment> segments;
  std::vector<Cell> cells;
  for (const auto& f : features) {
    Polygon h = detail::convex_hull(f);
    if (h.size() == 1) points.push_back(h[0]);
    else if (h.size() == 2) segments.push_back({h[0], h[1]});
    else if (h.size() >= 3) cells.push_back(std::move(h));
  }
  return make(std::move(points), std::move(segments), std::move(cells));
}

std::vector<Polygon> RegionComplex::features() const {
  std::vector<Polygon> out;
  out.reserve(feature_count());
  for (const auto& p : points_) out.push_back({p});
  for (const auto& s : segments_) out.push_back({s.a, s.b});
  for (const auto& c : cells_) out.push_back(c);
  return out;
}

std::vector<Point2> RegionComplex::vertices() const {
  std::vector<Point2> out;
  std::vector<std::pair<Point2, Point2>> all_edges;
  for (const auto& f : features()) {
    out.insert(out.end(), f.begin(), f.end());
    for (auto& e : detail::edges(f)) all_edges.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    for (std::size_t j = i + 1; j < all_edges.size(); ++j)
      if (auto x = detail::segment_crossing(all_edges[i].first, all_edges[i].second, all_edges[j].first,
                                            all_edges[j].second))
        out.push_back(std::move(*x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool RegionComplex::contains(const Point2& p) const {
  for (const auto& q : points_)
    if (q == p) return true;
  for (const auto& s : segments_)
    if (detail::contains(Polygon{s.a, s.b}, p)) return true;
  for (const auto& c : cells_)
    if (detail::contains(c, p)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Orthogonal hull on the grid spanned by the l1 coordinates of X.

namespace {

struct Grid {
  std::vector<Rat> us, vs;
  std::vector<Point2> pts;  // l1 images

  // every closed quadrant at (u, v) holds a point
  bool surrounded(const Rat& u, const Rat& v) const {
    bool sw = false, se = false, nw = false, ne = false;
    for (const auto& x : pts) {
      const int du = (x.x - u).sign();
      const int dv = (x.y - v).sign();
      sw = sw || (du <= 0 && dv <= 0);
      se = se || (du >= 0 && dv <= 0);
      nw = nw || (du <= 0 && dv >= 0);
      ne = ne || (du >= 0 && dv >= 0);
    }
    return sw && se && nw && ne;
  }
};

Rat mid(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

}  // namespace

RegionComplex orthogonal_hull(const std::vector<Point2>& X) {
  if (X.empty()) throw Error(ErrorCode::PreconditionViolated, "orthogonal hull of an empty set");
  Grid g;
  for (const auto& p : X) {
    g.pts.push_back(to_l1(p));
    g.us.push_back(g.pts.back().x);
    g.vs.push_back(g.pts.back().y);
  }
  for (auto* axis : {&g.us, &g.vs}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }
  const std::size_t nu = g.us.size(), nv = g.vs.size();

  auto at = [](std::vector<char>& m, std::size_t w, std::size_t i, std::size_t j) -> char& { return m[i * w + j]; };
  std::vector<char> node(nu * nv, 0), hedge(nu * nv, 0), vedge(nu * nv, 0), cell(nu * nv, 0);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      at(node, nv, i, j) = g.surrounded(g.us[i], g.vs[j]);
      if (i + 1 < nu) at(hedge, nv, i, j) = g.surrounded(mid(g.us[i], g.us[i + 1]), g.vs[j]);
      if (j + 1 < nv) at(vedge, nv, i, j) = g.surrounded(g.us[i], mid(g.vs[j], g.vs[j + 1]));
      if (i + 1 < nu && j + 1 < nv) at(cell, nv, i, j) = g.surrounded(mid(g.us[i], g.us[i + 1]), mid(g.vs[j], g.vs[j + 1]));
    }
  auto cell_on = [&](long i, long j) {
    return i >= 0 && j >= 0 && i + 1 < static_cast<long>(nu) && j + 1 < static_cast<long>(nv) &&
           at(cell, nv, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };

  std::vector<Polygon> features;
  auto l1_rect = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
    features.push_back(detail::convex_hull({from_l1({g.us[i0], g.vs[j0]}), from_l1({g.us[i1], g.vs[j0]}),
                                            from_l1({g.us[i1], g.vs[j1]}), from_l1({g.us[i0], g.vs[j1]})}));
  };

  // Cells: maximal runs per row, stacked while the run repeats exactly.
  struct Run {
    std::size_t i0, i1, j0, j1;
  };
  std::vector<Run> open;
  for (std::size_t j = 0; j + 1 < nv; ++j) {
    std::vector<std::pair<std::size_t, std::size_t>> row;
    for (std::size_t i = 0; i + 1 < nu;) {
      if (!at(cell, nv, i, j)) {
        ++i;
        continue;
      }
      std::size_t k = i;
      while (k + 1 < nu && at(cell, nv, k, j)) ++k;
      row.emplace_back(i, k);
      i = k;
    }
    std::vector<Run> next;
    for (const auto& [i0, i1] : row) {
      auto it = std::find_if(open.begin(), open.end(), [&](const Run& r) { return r.i0 == i0 && r.i1 == i1; });
      if (it != open.end()) {
        next.push_back({i0, i1, it->j0, j + 1});
        open.erase(it);
      } else {
        next.push_back({i0, i1, j, j + 1});
      }
    }
    for (const auto& r : open) l1_rect(r.i0, r.i1, r.j0, r.j1);
    open = std::move(next);
  }
  for (const auto& r : open) l1_rect(r.i0, r.i1, r.j0, r.j1);

  // Edges not on a cell, nodes not on an edge.
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      if (i + 1 < nu && at(hedge, nv, i, j) && !cell_on(li, lj) && !cell_on(li, lj - 1))
        features.push_back({from_l1({g.us[i], g.vs[j]}), from_l1({g.us[i + 1], g.vs[j]})});
      if (j + 1 < nv && at(vedge, nv, i, j) && !cell_on(li, lj) && !cell_on(li - 1, lj))
        features.push_back({from_l1({g.us[i], g.vs[j]}), from_l1({g.us[i], g.vs[j + 1]})});
      if (at(node, nv, i, j)) {
        const bool touched = (i + 1 < nu && at(hedge, nv, i, j)) || (i > 0 && at(hedge, nv, i - 1, j)) ||
                             (j + 1 < nv && at(vedge, nv, i, j)) || (j > 0 && at(vedge, nv, i, j - 1));
        if (!touched) features.push_back({from_l1({g.us[i], g.vs[j]})});
      }
    }
  return RegionComplex::from_features(features);
}

// ---------------------------------------------------------------------------

std::vector<RegionComplex> components(const RegionComplex& R) {
  const auto fs = R.features();
  std::vector<std::size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (find(i) != find(j) && detail::intersects(fs[i], fs[j])) parent[find(j)] = find(i);

  std::vector<std::size_t> order;
  std::map<std::size_t, std::vector<Polygon>> groups;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::size_t root = find(i);
    if (!groups.count(root)) order.push_back(root);
    groups[root].push_back(fs[i]);
  }
  std::vector<RegionComplex> out;
  for (auto root : order) out.push_back(RegionComplex::from_features(groups[root]));
  return out;
}

namespace {

// Coordinates (x if by_x, else y) of all vertices and edge crossings.
std::vector<Rat> critical_values(const std::vector<Polygon>& fs, bool by_x) {
  std::vector<Rat> vals;
  std::vector<std::pair<Point2, Point2>> all_edges;
  for (const auto& f : fs) {
    for (const auto& p : f) vals.push_back(by_x ? p.x : p.y);
    for (auto& e : detail::edges(f)) all_edges.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    for (std::size_t j = i + 1; j < all_edges.size(); ++j)
      if (auto x = detail::segment_crossing(all_edges[i].first, all_edges[i].second, all_edges[j].first,
                                            all_edges[j].second))
        vals.push_back(by_x ? x->x : x->y);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<std::pair<Rat, Rat>> line_slice(const std::vector<Polygon>& fs, const Rat& c, bool by_x) {
  std::vector<std::pair<Rat, Rat>> iv;
  for (const auto& f : fs) {
    auto s = by_x ? detail::slice_at_x(f, c) : detail::slice_at_y(f, c);
    if (s) iv.push_back(std::move(*s));
  }
  return detail::merge_intervals(std::move(iv));
}

std::vector<Polygon> l1_features(const RegionComplex& R) {
  std::vector<Polygon> out;
  for (const auto& f : R.features()) {
    Polygon g;
    for (const auto& p : f) g.push_back(to_l1(p));
    out.push_back(detail::convex_hull(std::move(g)));
  }
  return out;
}

}  // namespace

ConvexityReport is_geodesically_convex(const RegionComplex& R) {
  ConvexityReport rep;
  const auto comps = components(R);
  if (comps.size() > 1) {
    rep.convex = false;
    rep.witness = std::make_pair(comps[0].features().front().front(), comps[1].features().front().front());
    return rep;
  }
  const auto fs = l1_features(R);
  for (bool by_x : {false, true}) {
    const auto crit = critical_values(fs, !by_x);
    // by_x == false: horizontal lines v = c, otherwise vertical lines u = c
    std::vector<Rat> probes;
    for (std::size_t i = 0; i < crit.size(); ++i) {
      probes.push_back(crit[i]);
      if (i + 1 < crit.size()) probes.push_back(mid(crit[i], crit[i + 1]));
    }
    for (const auto& c : probes) {
      const auto iv = line_slice(fs, c, by_x);
      if (iv.size() > 1) {
        rep.convex = false;
        const Point2 a = by_x ? Point2{c, iv[0].second} : Point2{iv[0].second, c};
        const Point2 b = by_x ? Point2{c, iv[1].first} : Point2{iv[1].first, c};
        rep.witness = std::make_pair(from_l1(a), from_l1(b));
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

GchResult minimal_gch_detailed(const std::vector<Point2>& X) {
  GchResult res;
  res.hull = orthogonal_hull(X);
  auto comps = components(res.hull);

  struct Box {
    Rat umin, umax, vmin, vmax;
    std::size_t idx;
  };
  std::vector<Box> boxes;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto vs = comps[k].vertices();
    Box b{to_l1(vs[0]).x, to_l1(vs[0]).x, to_l1(vs[0]).y, to_l1(vs[0]).y, k};
    for (const auto& p : vs) {
      const Point2 q = to_l1(p);
      b.umin = min(b.umin, q.x);
      b.umax = max(b.umax, q.x);
      b.vmin = min(b.vmin, q.y);
      b.vmax = max(b.vmax, q.y);
    }
    boxes.push_back(std::move(b));
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.umin < b.umin; });

  for (std::size_t k = 0; k + 1 < boxes.size(); ++k) {
    const Box& a = boxes[k];
    const Box& b = boxes[k + 1];
    if (!(a.umax < b.umin)) throw Error(ErrorCode::InternalInvariant, "hull components overlap in u");
    Point2 start, end;
    if (a.vmax < b.vmin) {
      start = {a.umax, a.vmax};
      end = {b.umin, b.vmin};
    } else if (b.vmax < a.vmin) {
      start = {a.umax, a.vmin};
      end = {b.umin, b.vmax};
    } else {
      throw Error(ErrorCode::InternalInvariant, "hull components overlap in v");
    }
    const Point2 elbow{end.x, start.y};
    if (!comps[a.idx].contains(from_l1(start)) || !comps[b.idx].contains(from_l1(end)))
      throw Error(ErrorCode::InternalInvariant, "bridge corner outside its component");
    res.bridges.push_back({from_l1(start), from_l1(elbow)});
    res.bridges.push_back({from_l1(elbow), from_l1(end)});
  }

  if (res.bridges.empty()) {
    res.region = res.hull;
  } else {
    std::vector<Point2> pts = res.hull.points();
    std::vector<Segment> segs = res.hull.segments();
    for (const auto& s : res.bridges) segs.push_back(s);
    res.region = RegionComplex::make(std::move(pts), std::move(segs), res.hull.cells());
  }
  return res;
}

RegionComplex minimal_gch(const std::vector<Point2>& X) { return minimal_gch_detailed(X).region; }

// ---------------------------------------------------------------------------

std::vector<Point2> sample_points(const RegionComplex& R, std::size_t n, std::uint64_t seed) {
  if (R.empty()) throw Error(ErrorCode::EmptyRegion, "cannot sample an empty region");
  const auto fs = R.features();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(1, 64);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);

  auto draw = [&](const Polygon& f) -> Point2 {
    if (f.size() == 1) return f[0];
    if (f.size() == 2) {
      const Rat t(weight(rng) % 63 + 1, 64);  // strictly inside
      return f[0] + t * (f[1] - f[0]);
    }
    std::vector<long> w(f.size());
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    Point2 p{0, 0};
    for (std::size_t i = 0; i < f.size(); ++i) p = p + Rat(w[i], total) * f[i];
    return p;
  };

  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw(i < fs.size() ? fs[i] : fs[pick(rng)]));
  return out;
}

}  // namespace tspan
