#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspan/hyperconvex_check.hpp"
#include "tspan/region.hpp"
#include "tspan/tight_span.hpp"

namespace tspan {

struct Viewport {
  Rat xmin, ymin, xmax, ymax;
};

/// What to draw. Cells are filled, segments stroked bold, sites dotted;
/// outlines (e.g. hexagons) are stroked without fill.
struct RenderSpec {
  RegionComplex region;
  std::vector<Point2> sites;
  std::vector<detail::Polygon> outlines;
  std::vector<Segment> legs;  // stroked like segments, never merged
  std::optional<Viewport> viewport;  // default: padded bounding box
  std::string title;
};

RenderSpec render_spec(const RegionComplex& R, std::vector<Point2> sites = {});
RenderSpec render_spec(const TripodModel& m);
RenderSpec render_spec(const QuadModel& m);
/// Chart-coordinate hexagons of the counterexample.
RenderSpec render_spec(const HexagonReport& rep);

/// Deterministic SVG. Coordinates are decimals with 6 places; each element
/// carries its exact vertices in a data-exact attribute. Throws EmptyTarget
/// when there is nothing to draw or the viewport is empty.
std::string render_svg(const RenderSpec& spec);

}  // namespace tspan
