// Exact geodesic search. In l1 coordinates an l-infinity geodesic is a path
// monotone in both coordinates, so after orienting the pair we sweep the
// region upward, line by line, keeping for every interval of the current
// horizontal slice the leftmost point reachable by a monotone path.
#include <algorithm>

#include "tspan/error.hpp"
#include "tspan/region.hpp"

namespace tspan {

using detail::Polygon;

namespace {

struct Node {
  Rat lo, hi;
  std::optional<Rat> seed;
  long prev_line = -1;
  long prev_node = -1;
  Rat via;  // point on the previous line the path leaves from
};

std::vector<std::pair<Rat, Rat>> slice(const std::vector<Polygon>& fs, const Rat& y) {
  std::vector<std::pair<Rat, Rat>> iv;
  for (const auto& f : fs)
    if (auto s = detail::slice_at_y(f, y)) iv.push_back(std::move(*s));
  return detail::merge_intervals(std::move(iv));
}

long find_node(const std::vector<Node>& line, const Rat& lo, const Rat& hi) {
  for (std::size_t i = 0; i < line.size(); ++i)
    if (line[i].lo <= lo && hi <= line[i].hi) return static_cast<long>(i);
  return -1;
}

}  // namespace

std::optional<std::vector<Point2>> find_geodesic(const RegionComplex& R, const Point2& p, const Point2& q) {
  if (!R.contains(p) || !R.contains(q)) throw Error(ErrorCode::PreconditionViolated, "geodesic endpoints must lie in the region");
  if (p == q) return std::vector<Point2>{p};

  Point2 P = to_l1(p), Q = to_l1(q);
  const bool swapped = Q.y < P.y;
  if (swapped) std::swap(P, Q);
  const bool reflect = Q.x < P.x;
  auto tr = [reflect](const Point2& z) { return reflect ? Point2{-z.x, z.y} : z; };
  P = tr(P);
  Q = tr(Q);

  const std::vector<detail::HalfPlane> box{{-1, 0, -P.x}, {1, 0, Q.x}, {0, -1, -P.y}, {0, 1, Q.y}};
  std::vector<Polygon> fs;
  for (const auto& f : R.features()) {
    Polygon g;
    for (const auto& z : f) g.push_back(tr(to_l1(z)));
    Polygon c = detail::clip(detail::convex_hull(std::move(g)), box);
    if (!c.empty()) fs.push_back(std::move(c));
  }

  std::vector<Rat> levels{P.y, Q.y};
  std::vector<std::pair<Point2, Point2>> all_edges;
  for (const auto& f : fs) {
    for (const auto& z : f) levels.push_back(z.y);
    for (auto& e : detail::edges(f)) all_edges.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < all_edges.size(); ++i)
    for (std::size_t j = i + 1; j < all_edges.size(); ++j)
      if (auto x = detail::segment_crossing(all_edges[i].first, all_edges[i].second, all_edges[j].first,
                                            all_edges[j].second))
        levels.push_back(x->y);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::vector<Node>> lines(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (auto& [lo, hi] : slice(fs, levels[k])) lines[k].push_back(Node{lo, hi, std::nullopt, -1, -1, Rat()});

  const long start = find_node(lines[0], P.x, P.x);
  if (start < 0) throw Error(ErrorCode::InternalInvariant, "start point missing from its slice");
  lines[0][static_cast<std::size_t>(start)].seed = P.x;

  const Rat third(1, 3);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const Rat h = levels[k + 1] - levels[k];
    const auto s1 = slice(fs, levels[k] + third * h);
    const auto s2 = slice(fs, levels[k] + Rat(2) * third * h);
    if (s1.size() != s2.size()) throw Error(ErrorCode::InternalInvariant, "slab structure changed inside a slab");
    for (std::size_t j = 0; j < s1.size(); ++j) {
      // The slab piece is a trapezoid; extrapolate its sides to the two lines.
      const Rat lb = Rat(2) * s1[j].first - s2[j].first;
      const Rat rb = Rat(2) * s1[j].second - s2[j].second;
      const Rat lt = Rat(2) * s2[j].first - s1[j].first;
      const Rat rt = Rat(2) * s2[j].second - s1[j].second;
      const long bi = find_node(lines[k], lb, rb);
      const long ti = find_node(lines[k + 1], lt, rt);
      if (bi < 0 || ti < 0) throw Error(ErrorCode::InternalInvariant, "slab piece not attached to its lines");
      const Node& bottom = lines[k][static_cast<std::size_t>(bi)];
      if (!bottom.seed || *bottom.seed > rb) continue;
      const Rat alpha = max(*bottom.seed, lb);
      const Rat beta = max(alpha, lt);
      if (beta > rt) continue;
      Node& top = lines[k + 1][static_cast<std::size_t>(ti)];
      if (!top.seed || beta < *top.seed) {
        top.seed = beta;
        top.prev_line = static_cast<long>(k);
        top.prev_node = bi;
        top.via = alpha;
      }
    }
  }

  long k = static_cast<long>(levels.size()) - 1;
  long ni = find_node(lines[static_cast<std::size_t>(k)], Q.x, Q.x);
  if (ni < 0) throw Error(ErrorCode::InternalInvariant, "end point missing from its slice");
  {
    const Node& end = lines[static_cast<std::size_t>(k)][static_cast<std::size_t>(ni)];
    if (!end.seed || *end.seed > Q.x) return std::nullopt;
  }

  std::vector<Point2> rev{Q};
  while (true) {
    const Node& n = lines[static_cast<std::size_t>(k)][static_cast<std::size_t>(ni)];
    rev.push_back({*n.seed, levels[static_cast<std::size_t>(k)]});
    if (n.prev_line < 0) break;
    rev.push_back({n.via, levels[static_cast<std::size_t>(n.prev_line)]});
    k = n.prev_line;
    ni = n.prev_node;
  }

  std::vector<Point2> path;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    Point2 z = from_l1(tr(*it));
    if (path.empty() || path.back() != z) path.push_back(std::move(z));
  }
  if (swapped) std::reverse(path.begin(), path.end());
  // drop interior vertices that sit on a straight run
  std::vector<Point2> out;
  for (const auto& z : path) {
    while (out.size() >= 2 && detail::cross(out[out.size() - 2], out.back(), z).is_zero()) out.pop_back();
    out.push_back(z);
  }
  if (!is_geodesic_path(out)) throw Error(ErrorCode::InternalInvariant, "constructed path is not a geodesic");
  return out;
}

std::optional<Point2> geodesic_midpoint(const RegionComplex& R, const Point2& p, const Point2& q) {
  auto path = find_geodesic(R, p, q);
  if (!path) return std::nullopt;
  return path_point_at(*path, linf_distance(p, q) / Rat(2));
}

}  // namespace tspan
