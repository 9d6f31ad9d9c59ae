#pragma once

#include <string>
#include <vector>

#include "tspan/hyperconvex_check.hpp"
#include "tspan/metric_core.hpp"
#include "tspan/region.hpp"

namespace tspan {

// JSON documents. Rationals are strings such as "3/2" (plain integers are
// accepted too). Malformed documents throw Error(ParseError).

/// {"labels": [...], "dist": [[...], ...]}
FiniteMetric parse_metric(const std::string& text);
/// {"points": [["x","y"], ...]}
std::vector<Point2> parse_points(const std::string& text);
/// {"points": [...], "segments": [[p, q], ...], "cells": [[p, ...], ...]}
RegionComplex parse_region(const std::string& text);
/// {"balls": [{"center": [...], "radius": "r"}, ...]}
std::vector<BallN> parse_balls(const std::string& text);

/// Canonical region document (points, segments, cells in stored order).
std::string region_to_json(const RegionComplex& R);
std::string points_to_json(const std::vector<Point2>& pts);

std::string to_string(const PointN& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tspan
