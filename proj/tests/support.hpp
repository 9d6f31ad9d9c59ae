#pragma once
// Independent oracles and generators shared by the unit and acceptance tests.
// Nothing here calls the algorithms it is used to check.

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "tspan/linf_geometry.hpp"
#include "tspan/metric_core.hpp"
#include "tspan/region.hpp"

namespace oracle {

using tspan::Point2;
using tspan::Rat;
using tspan::RegionComplex;

// --- generators ------------------------------------------------------------

inline Rat rand_rat(std::mt19937_64& rng, long lo, long hi, long den = 1) {
  std::uniform_int_distribution<long> d(lo * den, hi * den);
  return Rat(d(rng), den);
}

inline std::vector<Point2> rand_points(std::mt19937_64& rng, std::size_t n, long lo, long hi, long den = 1) {
  std::vector<Point2> out;
  while (out.size() < n) {
    Point2 p{rand_rat(rng, lo, hi, den), rand_rat(rng, lo, hi, den)};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// --- exact containment of a straight segment in a region --------------------

inline bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  const Rat cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  return cr.is_zero() && tspan::min(a.x, b.x) <= p.x && p.x <= tspan::max(a.x, b.x) &&
         tspan::min(a.y, b.y) <= p.y && p.y <= tspan::max(a.y, b.y);
}

// parameter of p on a -> b
inline Rat param(const Point2& a, const Point2& b, const Point2& p) {
  return b.x != a.x ? (p.x - a.x) / (b.x - a.x) : (p.y - a.y) / (b.y - a.y);
}

// Covers [0,1] by the pieces of a->b inside each feature. Breakpoints are
// collected from crossings with every feature edge, and each open piece is
// tested at its midpoint; that is exact for polygonal regions.
inline bool segment_inside(const RegionComplex& R, const Point2& a, const Point2& b) {
  if (a == b) return R.contains(a);
  std::vector<Rat> ts{Rat(0), Rat(1)};
  for (const auto& f : R.features()) {
    std::vector<Point2> vs = f;
    for (const auto& v : vs)
      if (on_segment(a, b, v)) ts.push_back(param(a, b, v));
    for (std::size_t i = 0; vs.size() >= 2 && i < vs.size(); ++i) {
      const Point2& c = vs[i];
      const Point2& d = vs[(i + 1) % vs.size()];
      const Point2 r = b - a, s = d - c;
      const Rat den = r.x * s.y - r.y * s.x;
      if (den.is_zero()) continue;
      const Point2 w = c - a;
      const Rat t = (w.x * s.y - w.y * s.x) / den;
      const Rat u = (w.x * r.y - w.y * r.x) / den;
      if (t.sign() >= 0 && t <= Rat(1) && u.sign() >= 0 && u <= Rat(1)) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!R.contains(a + ts[i] * (b - a))) return false;
    if (i + 1 < ts.size() && !R.contains(a + ((ts[i] + ts[i + 1]) / Rat(2)) * (b - a))) return false;
  }
  return true;
}

inline bool path_inside(const RegionComplex& R, const std::vector<Point2>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!segment_inside(R, path[i], path[i + 1])) return false;
  return path.size() != 1 || R.contains(path[0]);
}

// --- orthogonal hull predicate, written in the original coordinates ---------
// p is surrounded iff each of the four closed quarter-planes bounded by the
// diagonals x+y = p1+p2 and y-x = p2-p1 holds a point of X.
inline bool surrounded(const std::vector<Point2>& X, const Point2& p) {
  bool q[2][2] = {{false, false}, {false, false}};
  for (const auto& x : X) {
    const Rat s = (x.x + x.y) - (p.x + p.y);
    const Rat t = (x.y - x.x) - (p.y - p.x);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const bool si = i == 0 ? s.sign() <= 0 : s.sign() >= 0;
        const bool tj = j == 0 ? t.sign() <= 0 : t.sign() >= 0;
        q[i][j] = q[i][j] || (si && tj);
      }
  }
  return q[0][0] && q[0][1] && q[1][0] && q[1][1];
}

// --- grid BFS for monotone staircases --------------------------------------
// For regions whose edges are all diagonal (axis-parallel after rotation),
// refine the grid of rotated coordinates by midpoints and search monotone
// grid paths. Returns true iff some staircase joins p and q inside R.
struct StaircaseGrid {
  std::vector<Rat> us, vs;  // rotated coordinates u = x + y, v = y - x
  const RegionComplex* R = nullptr;

  static Point2 back(const Rat& u, const Rat& v) { return {(u - v) / Rat(2), (u + v) / Rat(2)}; }

  StaircaseGrid(const RegionComplex& region, const std::vector<Point2>& extra) : R(&region) {
    std::set<Rat> su, sv;
    auto add = [&](const Point2& p) {
      su.insert(p.x + p.y);
      sv.insert(p.y - p.x);
    };
    for (const auto& f : region.features())
      for (const auto& p : f) add(p);
    for (const auto& p : extra) add(p);
    auto refine = [](const std::set<Rat>& s, std::vector<Rat>& out) {
      const std::vector<Rat> base(s.begin(), s.end());
      for (std::size_t i = 0; i < base.size(); ++i) {
        out.push_back(base[i]);
        if (i + 1 < base.size()) out.push_back((base[i] + base[i + 1]) / Rat(2));
      }
    };
    refine(su, us);
    refine(sv, vs);
  }

  bool reachable(const Point2& p, const Point2& q) const {
    Rat pu = p.x + p.y, pv = p.y - p.x, qu = q.x + q.y, qv = q.y - q.x;
    const long iu0 = std::lower_bound(us.begin(), us.end(), pu) - us.begin();
    const long iv0 = std::lower_bound(vs.begin(), vs.end(), pv) - vs.begin();
    const long iu1 = std::lower_bound(us.begin(), us.end(), qu) - us.begin();
    const long iv1 = std::lower_bound(vs.begin(), vs.end(), qv) - vs.begin();
    const long du = iu1 >= iu0 ? 1 : -1, dv = iv1 >= iv0 ? 1 : -1;
    std::set<std::pair<long, long>> seen;
    std::queue<std::pair<long, long>> work;
    work.push({iu0, iv0});
    seen.insert({iu0, iv0});
    while (!work.empty()) {
      auto [i, j] = work.front();
      work.pop();
      if (i == iu1 && j == iv1) return true;
      for (auto [ni, nj] : {std::make_pair(i + du, j), std::make_pair(i, j + dv)}) {
        if ((du > 0 ? ni > iu1 : ni < iu1) || (dv > 0 ? nj > iv1 : nj < iv1)) continue;
        if (seen.count({ni, nj})) continue;
        const Point2 a = back(us[i], vs[j]), b = back(us[ni], vs[nj]);
        const Point2 m{(a.x + b.x) / Rat(2), (a.y + b.y) / Rat(2)};
        if (!R->contains(b) || !R->contains(m)) continue;
        seen.insert({ni, nj});
        work.push({ni, nj});
      }
    }
    return false;
  }

  std::vector<Point2> nodes_in_region() const {
    std::vector<Point2> out;
    for (const auto& u : us)
      for (const auto& v : vs) {
        Point2 p = back(u, v);
        if (R->contains(p)) out.push_back(p);
      }
    return out;
  }
};

// --- brute-force tight-span membership on a lattice ---------------------------

inline bool tight_by_definition(const tspan::FiniteMetric& M, const std::vector<Rat>& f) {
  const std::size_t n = M.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].sign() < 0) return false;
    Rat best = f[i] + f[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rat g = f[i] + f[j] - M(i, j);
      if (g.sign() < 0) return false;
      best = tspan::min(best, g);
    }
    if (!best.is_zero()) return false;
  }
  return true;
}

}  // namespace oracle
