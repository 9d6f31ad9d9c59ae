#include "tspan/retraction.hpp"

#include <algorithm>

#include "tspan/error.hpp"

namespace tspan {

using detail::HalfPlane;
using detail::Polygon;

bool SectorProfile::has(SectorId s) const { return std::find(meets.begin(), meets.end(), s) != meets.end(); }

std::string_view to_string(RetractionCase c) {
  switch (c) {
    case RetractionCase::ThreeSector: return "three_sector";
    case RetractionCase::TwoSector: return "two_sector";
    case RetractionCase::TwoSectorElbow: return "two_sector_elbow";
    case RetractionCase::OneSector: return "one_sector";
    case RetractionCase::OneSectorElbow: return "one_sector_elbow";
  }
  return "?";
}

std::vector<Point2> RetractionTrace::chain() const {
  std::vector<Point2> out;
  for (const auto& s : steps) out.push_back(s.point);
  out.push_back(target);
  return out;
}

namespace {

// Closed sector as two half-planes: along >= other and along >= -other.
std::vector<HalfPlane> sector_planes(const Point2& p, SectorId s) {
  const Rat sg = s.sign == Sign::Plus ? Rat(1) : Rat(-1);
  // linear forms a*x + b*y + c
  Rat aa, ab, ac, oa, ob, oc;
  if (s.axis == 1) {
    aa = sg, ab = 0, ac = -sg * p.x;
    oa = 0, ob = 1, oc = -p.y;
  } else {
    aa = 0, ab = sg, ac = -sg * p.y;
    oa = 1, ob = 0, oc = -p.x;
  }
  return {HalfPlane{oa - aa, ob - ab, ac - oc}, HalfPlane{-oa - aa, -ob - ab, oc + ac}};
}

std::vector<Polygon> transformed(const std::vector<Polygon>& fs, const Symmetry& sym) {
  std::vector<Polygon> out;
  for (const auto& f : fs) {
    Polygon g;
    for (const auto& z : f) g.push_back(sym.apply(z));
    out.push_back(detail::convex_hull(std::move(g)));
  }
  return out;
}

const std::vector<SectorId> kThree{{1, Sign::Plus}, {2, Sign::Plus}, {2, Sign::Minus}};
const std::vector<SectorId> kTwo{{1, Sign::Plus}, {2, Sign::Plus}};
const std::vector<SectorId> kOne{{1, Sign::Plus}};

bool maps_to(const SectorProfile& prof, const Symmetry& sym, const std::vector<SectorId>& canon) {
  if (prof.meets.size() != canon.size()) return false;
  for (const auto& s : prof.meets)
    if (std::find(canon.begin(), canon.end(), sym.apply(s)) == canon.end()) return false;
  return true;
}

// One step in the normalized frame; returns the next point there.
Point2 normalized_step(const std::vector<Polygon>& fs, const Point2& p, RetractionCase c) {
  switch (c) {
    case RetractionCase::ThreeSector: {
      // first point of A on the ray (p1 + t, p2)
      std::optional<Rat> best;
      for (const auto& f : fs) {
        auto s = detail::slice_at_y(f, p.y);
        if (!s || s->second < p.x) continue;
        Rat x = max(s->first, p.x);
        if (!best || x < *best) best = std::move(x);
      }
      if (!best) throw Error(ErrorCode::InternalInvariant, "three-sector ray misses A");
      return {*best, p.y};
    }
    case RetractionCase::TwoSector: {
      // first anti-diagonal line x + y = const touching A
      std::optional<Rat> t0;
      for (const auto& f : fs)
        for (const auto& z : f) {
          Rat t = (z.x + z.y - p.x - p.y) / Rat(2);
          if (!t0 || t < *t0) t0 = std::move(t);
        }
      return {p.x + *t0, p.y + *t0};
    }
    case RetractionCase::OneSector: {
      // first right-facing elbow at (p1 + t, p2) touching A; concave in z,
      // so the minimum over a convex feature sits at a vertex
      std::optional<Rat> t0;
      for (const auto& f : fs)
        for (const auto& z : f) {
          Rat t = (z.x - p.x) - (z.y - p.y).abs();
          if (!t0 || t < *t0) t0 = std::move(t);
        }
      return {p.x + *t0, p.y};
    }
    default:
      break;
  }
  throw Error(ErrorCode::InternalInvariant, "unsupported retraction case");
}

}  // namespace

SectorProfile sector_profile(const RegionComplex& A, const Point2& p) {
  SectorProfile prof;
  const auto fs = A.features();
  for (const auto s : SectorId::all()) {
    const auto hs = sector_planes(p, s);
    for (const auto& f : fs)
      if (!detail::clip(f, hs).empty()) {
        prof.meets.push_back(s);
        break;
      }
  }
  prof.opposite_only = prof.meets.size() == 2 && prof.meets[0].axis == prof.meets[1].axis;
  return prof;
}

RetractionTrace retract_point(const RegionComplex& A, const Point2& p) {
  if (A.empty()) throw Error(ErrorCode::EmptyRegion, "cannot retract onto an empty region");
  if (!is_geodesically_convex(A).convex) throw Error(ErrorCode::NotGeodesicallyConvex, "retraction needs a geodesically convex region");

  RetractionTrace trace;
  const auto fs = A.features();
  Point2 cur = p;
  // one-sector -> two-sector -> three-sector -> A, plus slack
  for (int guard = 0; guard < 8; ++guard) {
    if (A.contains(cur)) {
      trace.target = cur;
      return trace;
    }
    const SectorProfile prof = sector_profile(A, cur);
    const std::vector<SectorId>* canon = nullptr;
    RetractionCase tag{};
    switch (prof.meets.size()) {
      case 3: canon = &kThree, tag = RetractionCase::ThreeSector; break;
      case 2:
        if (prof.opposite_only) throw Error(ErrorCode::InternalInvariant, "only opposite sectors meet A outside A");
        canon = &kTwo, tag = RetractionCase::TwoSector;
        break;
      case 1: canon = &kOne, tag = RetractionCase::OneSector; break;
      default: throw Error(ErrorCode::InternalInvariant, "all four sectors meet A but p is outside A");
    }
    bool done = false;
    for (const auto& sym : Symmetry::all()) {
      if (!maps_to(prof, sym, *canon)) continue;
      const Point2 next = sym.invert(normalized_step(transformed(fs, sym), sym.apply(cur), tag));
      trace.steps.push_back({cur, tag});
      cur = next;
      done = true;
      break;
    }
    if (!done) throw Error(ErrorCode::InternalInvariant, "no symmetry normalizes the sector profile");
  }
  throw Error(ErrorCode::InternalInvariant, "retraction did not reach A");
}

NonexpansiveReport verify_nonexpansive(const RegionComplex& A, const Point2& p, const Point2& q, std::size_t n_samples,
                                       std::uint64_t seed) {
  if (!A.contains(q)) throw Error(ErrorCode::TargetOutsideRegion, "target " + to_string(q) + " is not in the region");
  return check_step(A, p, q, n_samples, seed);
}

NonexpansiveReport check_step(const RegionComplex& A, const Point2& p, const Point2& q, std::size_t n_samples,
                              std::uint64_t seed) {
  NonexpansiveReport rep;
  auto check = [&](const Point2& a) {
    if (linf_distance(a, q) > linf_distance(a, p)) {
      rep.ok = false;
      rep.witness = a;
    }
    return rep.ok;
  };
  for (const auto& a : A.vertices())
    if (!check(a)) return rep;
  if (n_samples > 0)
    for (const auto& a : sample_points(A, n_samples, seed))
      if (!check(a)) return rep;
  return rep;
}

}  // namespace tspan
