#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tspan/linf_geometry.hpp"
#include "tspan/region.hpp"

namespace tspan {

/// Which closed sectors of p meet A.
struct SectorProfile {
  std::vector<SectorId> meets;  // in SectorId::all() order
  bool opposite_only = false;   // exactly {S_i^+, S_i^-}

  bool has(SectorId s) const;
};

SectorProfile sector_profile(const RegionComplex& A, const Point2& p);

/// The elbow tags are part of the vocabulary of the construction but never
/// produced: for a compact polygonal A every sweep reaches its infimum, so
/// the "line misses A" branches are unreachable.
enum class RetractionCase { ThreeSector, TwoSector, TwoSectorElbow, OneSector, OneSectorElbow };

std::string_view to_string(RetractionCase c);

struct RetractionStep {
  Point2 point;         // where the step starts
  RetractionCase tag;   // case applied at that point
};

struct RetractionTrace {
  std::vector<RetractionStep> steps;  // empty when p is already in A
  Point2 target;

  /// p, each intermediate point, target.
  std::vector<Point2> chain() const;
};

/// Nonexpansive retraction of A ∪ {p} onto A following the sector case
/// analysis. Throws EmptyRegion, NotGeodesicallyConvex, InternalInvariant.
RetractionTrace retract_point(const RegionComplex& A, const Point2& p);

struct NonexpansiveReport {
  bool ok = true;
  std::optional<Point2> witness;  // a in A with d(a, q) > d(a, p)
};

/// Step contract: d(a,to) <= d(a,from) on every arrangement vertex of A and
/// on n seeded samples. `to` need not lie in A.
NonexpansiveReport check_step(const RegionComplex& A, const Point2& from, const Point2& to, std::size_t n_samples,
                              std::uint64_t seed);

/// Checks d(a,q) <= d(a,p) on every arrangement vertex of A and on n seeded
/// samples. Throws TargetOutsideRegion when q is not in A.
NonexpansiveReport verify_nonexpansive(const RegionComplex& A, const Point2& p, const Point2& q, std::size_t n_samples,
                                       std::uint64_t seed);

}  // namespace tspan
