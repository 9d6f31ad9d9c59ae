#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tspan/error.hpp"
#include "tspan/linf_geometry.hpp"

using namespace tspan;

namespace {

const SectorId S1p{1, Sign::Plus}, S1m{1, Sign::Minus}, S2p{2, Sign::Plus}, S2m{2, Sign::Minus};

std::vector<Point2> grid(const Rat& lo, const Rat& hi, int steps) {
  std::vector<Point2> out;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j)
      out.push_back({lo + (hi - lo) * Rat(i, steps), lo + (hi - lo) * Rat(j, steps)});
  return out;
}

}  // namespace

TEST(Sectors, Examples) {
  EXPECT_TRUE(in_sector({0, 0}, S1p, {3, 1}));
  EXPECT_TRUE(in_sector({0, 0}, S1p, {2, 2}));
  EXPECT_TRUE(in_sector({0, 0}, S2p, {2, 2}));
  EXPECT_TRUE(in_sector({Rat(1, 2), 1}, S2p, {0, 3}));
  EXPECT_FALSE(in_sector({Rat(1, 2), 1}, S1m, {0, 3}));
}

TEST(Sectors, PointIsInAllFour) {
  for (auto s : SectorId::all()) EXPECT_TRUE(in_sector({1, 2}, s, {1, 2}));
}

TEST(Sectors, PartitionProperty) {
  const Point2 p{Rat(1, 3), Rat(-1, 2)};
  for (const auto& q : grid(-3, 3, 24)) {
    if (q == p) continue;
    int count = 0;
    for (auto s : SectorId::all()) count += in_sector(p, s, q);
    const bool diagonal = (q.x - p.x).abs() == (q.y - p.y).abs();
    EXPECT_GE(count, 1);
    EXPECT_LE(count, 2);
    EXPECT_EQ(count == 2, diagonal) << q;
  }
}

TEST(Rays, Examples) {
  EXPECT_TRUE(in_ray({0, 0}, {Sign::Plus, Sign::Plus}, {2, 2}));
  EXPECT_FALSE(in_ray({0, 0}, {Sign::Plus, Sign::Plus}, {2, -2}));
  EXPECT_TRUE(in_ray({0, 0}, {Sign::Plus, Sign::Minus}, {2, -2}));
}

TEST(Rays, AgreeWithSectorIntersectionOnGrid) {
  const Point2 p{Rat(1, 2), Rat(1, 4)};
  const Rat step(1, 2);
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      const Point2 q{p.x + Rat(i) * step, p.y + Rat(j) * step};
      for (Sign a : {Sign::Plus, Sign::Minus})
        for (Sign b : {Sign::Plus, Sign::Minus})
          EXPECT_EQ(in_ray(p, {a, b}, q), in_sector(p, {1, a}, q) && in_sector(p, {2, b}, q)) << q;
    }
}

TEST(Diamond, Examples) {
  EXPECT_TRUE(in_diamond({0, 0}, {4, 2}, {2, 1}));
  EXPECT_TRUE(in_diamond({0, 0}, {4, 2}, {1, -1}));
  EXPECT_FALSE(in_diamond({0, 0}, {4, 2}, {0, 3}));
}

TEST(Diamond, EqualsSectorIntersection) {
  const Point2 p{0, 0};
  for (const Point2 q : {Point2{4, 2}, Point2{-3, 1}, Point2{1, 5}, Point2{Rat(5, 2), Rat(-7, 2)}}) {
    SectorId s{};
    for (auto c : SectorId::all())
      if (in_sector(p, c, q)) s = c;
    const SectorId back{s.axis, flip(s.sign)};
    // box a little larger than the bounding box of p and q
    for (const auto& u : grid(-6, 6, 48)) EXPECT_EQ(in_diamond(p, q, u), in_sector(p, s, u) && in_sector(q, back, u)) << q << u;
  }
}

TEST(Diamond, DiagonalPairsHaveUniqueGeodesic) {
  const Point2 p{1, 1};
  for (const Point2 q : {Point2{4, 4}, Point2{4, -2}, Point2{-1, 3}}) {
    for (const auto& u : grid(-3, 5, 32)) {
      const bool on_seg = oracle::on_segment(p, q, u);
      EXPECT_EQ(in_diamond(p, q, u), on_seg) << q << u;
    }
  }
}

TEST(Rotation, Examples) {
  EXPECT_EQ(to_l1({0, 0}), (Point2{0, 0}));
  EXPECT_EQ(to_l1({2, 2}), (Point2{4, 0}));
  EXPECT_EQ(l1_distance(to_l1({2, 2}), to_l1({0, 0})), Rat(kL1Scale) * linf_distance({2, 2}, {0, 0}));
}

TEST(Rotation, InverseAndScale) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Point2 p{oracle::rand_rat(rng, -9, 9, 7), oracle::rand_rat(rng, -9, 9, 5)};
    const Point2 q{oracle::rand_rat(rng, -9, 9, 3), oracle::rand_rat(rng, -9, 9, 2)};
    EXPECT_EQ(from_l1(to_l1(p)), p);
    EXPECT_EQ(l1_distance(to_l1(p), to_l1(q)), Rat(2) * linf_distance(p, q));
  }
}

TEST(Rotation, DiamondConjugatesToL1Betweenness) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) {
    const Point2 p{oracle::rand_rat(rng, -3, 3), oracle::rand_rat(rng, -3, 3)};
    const Point2 q{oracle::rand_rat(rng, -3, 3), oracle::rand_rat(rng, -3, 3)};
    const Point2 u{oracle::rand_rat(rng, -3, 3, 2), oracle::rand_rat(rng, -3, 3, 2)};
    const Point2 P = to_l1(p), Q = to_l1(q), U = to_l1(u);
    // l1 betweenness: U inside the axis box of P and Q
    const bool l1 = min(P.x, Q.x) <= U.x && U.x <= max(P.x, Q.x) && min(P.y, Q.y) <= U.y && U.y <= max(P.y, Q.y);
    EXPECT_EQ(in_diamond(p, q, u), l1);
  }
}

TEST(Geodesics, PolylineValidation) {
  EXPECT_NO_THROW(GeodesicPolyline::make({{0, 0}, {3, 1}, {5, 1}}));
  EXPECT_THROW(GeodesicPolyline::make({{0, 0}, {4, 1}, {0, 2}}), Error);
  const auto g = GeodesicPolyline::make({{0, 0}, {2, 0}, {3, 1}});
  EXPECT_EQ(g.length(), Rat(3));
  EXPECT_EQ(g.point_at(Rat(1)), (Point2{1, 0}));
  EXPECT_EQ(g.point_at(Rat(5, 2)), (Point2{Rat(5, 2), Rat(1, 2)}));
}

TEST(CrossingParameter, Examples) {
  const auto g1 = GeodesicPolyline::make({{3, 1}, {1, 3}});
  EXPECT_EQ(crossing_parameter({0, 0}, g1, Sign::Plus, Sign::Plus), Rat(1));
  const auto g2 = GeodesicPolyline::make({{2, 2}, {0, 4}});
  EXPECT_EQ(crossing_parameter({0, 0}, g2, Sign::Plus, Sign::Plus), Rat(0));
}

TEST(CrossingParameter, StaircaseWalk) {
  // (4,1) -> (4,4) -> (2,4) is 5 long against a distance of 3: not a
  // geodesic, so it is walked as a plain polyline.
  const std::vector<Point2> path{{4, 1}, {4, 4}, {2, 4}};
  EXPECT_FALSE(is_geodesic_path(path));
  EXPECT_THROW(GeodesicPolyline::make(path), Error);
  EXPECT_EQ(crossing_parameter({1, 1}, path, Sign::Plus, Sign::Plus), Rat(3));
}

TEST(CrossingParameter, Preconditions) {
  const auto g = GeodesicPolyline::make({{1, 3}, {3, 1}});
  EXPECT_THROW(crossing_parameter({0, 0}, g, Sign::Plus, Sign::Plus), Error);
}

TEST(CrossingParameter, GeodesicsAlwaysCross) {
  // endpoints in S_1^+ and S_2^+ of the origin, monotone geodesics between
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 100) {
    const Point2 a{oracle::rand_rat(rng, 0, 6, 2), oracle::rand_rat(rng, -6, 6, 2)};
    const Point2 b{oracle::rand_rat(rng, -6, 6, 2), oracle::rand_rat(rng, 0, 6, 2)};
    if (!in_sector({0, 0}, S1p, a) || !in_sector({0, 0}, S2p, b)) continue;
    // a two-leg geodesic through a random diamond point
    const Point2 m{oracle::rand_rat(rng, -6, 6, 4), oracle::rand_rat(rng, -6, 6, 4)};
    if (!in_diamond(a, b, m)) continue;
    const std::vector<Point2> path{a, m, b};
    const Rat t = crossing_parameter({0, 0}, path, Sign::Plus, Sign::Plus);
    const Point2 c = path_point_at(path, t);
    EXPECT_TRUE(in_ray({0, 0}, {Sign::Plus, Sign::Plus}, c));
    // smallest: no earlier vertex-grid point is on the ray
    for (int k = 0; k < 16; ++k) {
      const Rat s = t * Rat(k, 16);
      EXPECT_FALSE(in_ray({0, 0}, {Sign::Plus, Sign::Plus}, path_point_at(path, s)) && s < t);
    }
    ++checked;
  }
}

TEST(Symmetries, PreserveDistanceAndSectors) {
  std::mt19937_64 rng(4);
  for (const auto& sym : Symmetry::all()) {
    for (int i = 0; i < 20; ++i) {
      const Point2 p{oracle::rand_rat(rng, -4, 4, 2), oracle::rand_rat(rng, -4, 4, 2)};
      const Point2 q{oracle::rand_rat(rng, -4, 4, 2), oracle::rand_rat(rng, -4, 4, 2)};
      EXPECT_EQ(sym.invert(sym.apply(p)), p);
      EXPECT_EQ(linf_distance(sym.apply(p), sym.apply(q)), linf_distance(p, q));
      for (auto s : SectorId::all()) EXPECT_EQ(in_sector(sym.apply(p), sym.apply(s), sym.apply(q)), in_sector(p, s, q));
    }
  }
}
