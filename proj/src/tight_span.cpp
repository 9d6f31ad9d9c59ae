#include "tspan/tight_span.hpp"

#include <algorithm>
#include <random>

#include "tspan/error.hpp"

namespace tspan {

namespace {

void require_length(const FiniteMetric& M, const std::vector<Rat>& f) {
  if (f.size() != M.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "function has " + std::to_string(f.size()) + " values for " + std::to_string(M.size()) + " labels");
  }
}

FiniteMetric triangle_metric(const Rat& a, const Rat& b, const Rat& c) {
  // a = d(P2,P3), b = d(P1,P3), c = d(P1,P2)
  return validate_metric({"P1", "P2", "P3"}, {{0, c, b}, {c, 0, a}, {b, a, 0}});
}

FiniteMetric quad_metric(const QuadDistances& q) {
  return validate_metric({"P1", "P2", "P3", "P4"},
                         {{0, q.c, q.b, q.d}, {q.c, 0, q.a, q.e}, {q.b, q.a, 0, q.f}, {q.d, q.e, q.f, 0}});
}

}  // namespace

TightFunction kuratowski(const FiniteMetric& M, std::string_view x) {
  const std::size_t i = M.require_index(x);
  TightFunction f{&M, {}};
  for (std::size_t j = 0; j < M.size(); ++j) f.values.push_back(M(i, j));
  return f;
}

std::vector<std::vector<Rat>> gap_table(const FiniteMetric& M, const std::vector<Rat>& f) {
  require_length(M, f);
  std::vector<std::vector<Rat>> g(M.size(), std::vector<Rat>(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) g[i][j] = f[i] + f[j] - M(i, j);
  return g;
}

bool is_feasible(const FiniteMetric& M, const std::vector<Rat>& f) {
  require_length(M, f);
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (f[i].sign() < 0) return false;
    for (std::size_t j = i + 1; j < M.size(); ++j)
      if (f[i] + f[j] < M(i, j)) return false;
  }
  return true;
}

bool is_tight_point(const FiniteMetric& M, const std::vector<Rat>& f) {
  if (!is_feasible(M, f)) return false;
  const auto g = gap_table(M, f);
  for (const auto& row : g)
    if (!std::any_of(row.begin(), row.end(), [](const Rat& v) { return v.is_zero(); })) return false;
  return true;
}

Rat tspan_distance(const TightFunction& f, const TightFunction& g) {
  if (f.base != g.base && !(f.base && g.base && *f.base == *g.base))
    throw Error(ErrorCode::BaseMismatch, "functions over different metrics");
  if (f.values.size() != g.values.size()) throw Error(ErrorCode::BaseMismatch, "functions of different length");
  Rat best;
  for (std::size_t i = 0; i < f.values.size(); ++i) best = max(best, (f.values[i] - g.values[i]).abs());
  return best;
}

TightFunction descend_to_tight(const FiniteMetric& M, std::vector<Rat> f, std::size_t* passes) {
  require_length(M, f);
  if (!is_feasible(M, f)) throw Error(ErrorCode::InfeasibleInput, "descent needs a feasible nonnegative start");
  std::size_t count = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++count;
    for (std::size_t x = 0; x < M.size(); ++x) {
      Rat v;
      for (std::size_t y = 0; y < M.size(); ++y)
        if (y != x) v = max(v, M(x, y) - f[y]);
      if (v != f[x]) {
        f[x] = std::move(v);
        changed = true;
      }
    }
  }
  if (passes) *passes = count;
  return TightFunction{&M, std::move(f)};
}

std::array<Point2, 3> embed3(const Rat& a, const Rat& b, const Rat& c) {
  triangle_metric(a, b, c);
  if (a < b) {
    // rename P1 <-> P2, which swaps the roles of a and b
    const auto s = embed3(b, a, c);
    return {s[1], s[0], s[2]};
  }
  return {Point2{0, c}, Point2{0, 0}, Point2{b, a}};
}

QuadCanonical canonical_quad(const QuadDistances& q) {
  const FiniteMetric M = quad_metric(q);
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    auto D = [&](std::size_t i, std::size_t j) { return M(perm[i], perm[j]); };
    QuadDistances c{D(1, 2), D(0, 2), D(0, 1), D(0, 3), D(1, 3), D(2, 3)};
    if (c.c + c.f <= c.b + c.e && c.b + c.e <= c.a + c.d) return {perm, c};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorCode::InternalInvariant, "no labeling orders the pair sums");
}

std::array<Point2, 4> embed4(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f) {
  const QuadDistances in{a, b, c, d, e, f};
  const FiniteMetric M = quad_metric(in);
  const auto [perm, q] = canonical_quad(in);
  const std::array<Point2, 4> canon{Point2{q.e - q.d, q.c}, Point2{0, 0}, Point2{q.b + q.e - q.d, q.a},
                                    Point2{q.e, q.a - q.f}};
  std::array<Point2, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[perm[i]] = canon[i];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (linf_distance(out[i], out[j]) != M(i, j)) {
        throw Error(ErrorCode::EmbeddingInfeasible,
                    "template distance for (P" + std::to_string(i + 1) + ",P" + std::to_string(j + 1) + ") is " +
                        linf_distance(out[i], out[j]).str() + ", expected " + M(i, j).str(),
                    {i, j});
      }
  return out;
}

TripodModel tripod_span(const Rat& a, const Rat& b, const Rat& c) {
  triangle_metric(a, b, c);
  const Rat half(1, 2);
  return TripodModel{{half * (b + c - a), half * (a + c - b), half * (a + b - c)}};
}

QuadModel quad_span(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f) {
  const auto [perm, q] = canonical_quad({a, b, c, d, e, f});
  const Rat half(1, 2);
  QuadModel m;
  m.lengths = {half * (q.c + q.e - q.d), half * (q.a + q.d - q.c - q.f), half * (q.e + q.f - q.a),
               half * (q.a + q.d - q.b - q.e), half * (q.b + q.f - q.d), half * (q.b + q.c - q.a)};
  for (std::size_t i = 0; i < 6; ++i)
    if (m.lengths[i].sign() < 0) throw Error(ErrorCode::NegativeLength, "length " + std::to_string(i) + " is negative", {i});
  m.width = m.lengths[1];
  m.height = m.lengths[3];
  m.perm = perm;
  return m;
}

ModelLayout tripod_layout(const TripodModel& m) {
  const Point2 o{0, 0};
  const std::array<Point2, 3> t{Point2{-m.legs[0], m.legs[0]}, Point2{-m.legs[1], -m.legs[1]}, Point2{m.legs[2], m.legs[2]}};
  ModelLayout out{RegionComplex::make({o}, {}, {}), {}};
  for (const auto& p : t) out.legs.push_back({o, p});
  return out;
}

ModelLayout quad_layout(const QuadModel& m) {
  const Rat& w = m.width;
  const Rat& h = m.height;
  const Point2 A{0, 0}, B{w, w}, C{w - h, w + h}, D{-h, h};
  // canonical P1..P4 hang off D, A, C, B
  const std::array<Point2, 4> at{D, A, C, B};
  const std::array<Point2, 4> dir{Point2{-1, 1}, Point2{-1, -1}, Point2{1, 1}, Point2{1, -1}};
  const std::array<Rat, 4> len{m.lengths[5], m.lengths[0], m.lengths[4], m.lengths[2]};
  ModelLayout out{RegionComplex::from_features({detail::convex_hull({A, B, C, D})}), std::vector<Segment>(4)};
  for (std::size_t i = 0; i < 4; ++i) out.legs[m.perm[i]] = {at[i], at[i] + len[i] * dir[i]};
  return out;
}

namespace {

template <std::size_t N>
RegionComplex assemble(const ModelLayout& lay, std::array<Point2, N>* tips) {
  std::vector<detail::Polygon> fs = lay.core.features();
  for (std::size_t i = 0; i < N; ++i) {
    fs.push_back({lay.legs[i].a, lay.legs[i].b});
    if (tips) (*tips)[i] = lay.legs[i].b;
  }
  return RegionComplex::from_features(fs);
}

}  // namespace

RegionComplex tripod_region(const TripodModel& m, std::array<Point2, 3>* tips) { return assemble(tripod_layout(m), tips); }

RegionComplex quad_region(const QuadModel& m, std::array<Point2, 4>* tips) { return assemble(quad_layout(m), tips); }

TightFunction phi_map(const FiniteMetric& M, const std::vector<Point2>& X_points, const Point2& y) {
  std::vector<PointN> xs;
  for (const auto& p : X_points) xs.push_back({p.x, p.y});
  return phi_map(M, xs, PointN{y.x, y.y});
}

TightFunction phi_map(const FiniteMetric& M, const std::vector<PointN>& X_points, const PointN& y) {
  if (X_points.size() != M.size()) throw Error(ErrorCode::MetricMismatch, "point count differs from the metric size");
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j)
      if (linf_distance(X_points[i], X_points[j]) != M(i, j))
        throw Error(ErrorCode::MetricMismatch, "metric is not the l-infinity metric of the points", {i, j});
  TightFunction f{&M, {}};
  for (const auto& x : X_points) f.values.push_back(linf_distance(y, x));
  return f;
}

IsometryReport check_isometry(const RegionComplex& Y, const std::vector<Point2>& X_points, std::size_t n_pairs,
                              std::uint64_t seed) {
  std::vector<Point2> X = X_points;
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  for (std::size_t i = 0; i < X.size(); ++i)
    if (!Y.contains(X[i])) throw Error(ErrorCode::ContainmentViolation, to_string(X[i]) + " is not in the region", {i});

  IsometryReport rep;
  if (X.size() == 1) {
    // T of a point is the point: Y must be that point
    const bool single = Y.feature_count() == 1 && Y.points().size() == 1;
    if (!single) {
      rep.pass = false;
      rep.failed_check = "tight";
      rep.y = Y.vertices().front() == X[0] ? Y.vertices().back() : Y.vertices().front();
    }
    return rep;
  }

  std::vector<std::string> labels;
  std::vector<PointN> xs;
  for (std::size_t i = 0; i < X.size(); ++i) {
    labels.push_back("x" + std::to_string(i));
    xs.push_back({X[i].x, X[i].y});
  }
  const FiniteMetric M = linf_metric(labels, xs);
  auto phi = [&](const Point2& y) {
    TightFunction f{&M, {}};
    for (const auto& x : X) f.values.push_back(linf_distance(y, x));
    return f;
  };

  const std::vector<Point2> verts = Y.vertices();
  std::vector<Point2> pool = verts;
  for (auto& s : sample_points(Y, std::max(n_pairs, Y.feature_count()), seed)) pool.push_back(std::move(s));

  std::vector<TightFunction> images;
  images.reserve(pool.size());
  for (const auto& y : pool) {
    images.push_back(phi(y));
    ++rep.points_checked;
    if (!is_tight_point(M, images.back().values)) {
      rep.pass = false;
      rep.failed_check = "tight";
      rep.y = y;
      return rep;
    }
  }
  auto check_pair = [&](std::size_t i, std::size_t j) {
    ++rep.pairs_checked;
    if (tspan_distance(images[i], images[j]) != linf_distance(pool[i], pool[j])) {
      rep.pass = false;
      rep.failed_check = "distance";
      rep.y = pool[i];
      rep.z = pool[j];
    }
    return rep.pass;
  };
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!check_pair(i, j)) return rep;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (!check_pair(i, j)) return rep;
  }
  return rep;
}

}  // namespace tspan
