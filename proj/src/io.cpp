#include "tspan/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tspan/error.hpp"

namespace tspan {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  return j;
}

Rat rat(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

Point2 point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "a point is a pair [x, y], got " + j.dump());
  return {rat(j[0]), rat(j[1])};
}

json point_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

}  // namespace

FiniteMetric parse_metric(const std::string& text) {
  const json j = parse_json(text);
  std::vector<std::string> labels;
  for (const auto& l : array(field(j, "labels"), "labels")) {
    if (!l.is_string()) throw Error(ErrorCode::ParseError, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<Rat>> m;
  for (const auto& row : array(field(j, "dist"), "dist")) {
    m.emplace_back();
    for (const auto& v : array(row, "dist row")) m.back().push_back(rat(v));
  }
  return validate_metric(std::move(labels), m);
}

std::vector<Point2> parse_points(const std::string& text) {
  const json j = parse_json(text);
  std::vector<Point2> out;
  for (const auto& p : array(field(j, "points"), "points")) out.push_back(point(p));
  return out;
}

RegionComplex parse_region(const std::string& text) {
  const json j = parse_json(text);
  std::vector<Point2> pts;
  std::vector<Segment> segs;
  std::vector<Cell> cells;
  if (j.contains("points"))
    for (const auto& p : array(j["points"], "points")) pts.push_back(point(p));
  if (j.contains("segments"))
    for (const auto& s : array(j["segments"], "segments")) {
      if (!s.is_array() || s.size() != 2) throw Error(ErrorCode::ParseError, "a segment is [p, q]");
      segs.push_back({point(s[0]), point(s[1])});
    }
  if (j.contains("cells"))
    for (const auto& c : array(j["cells"], "cells")) {
      cells.emplace_back();
      for (const auto& p : array(c, "cell")) cells.back().push_back(point(p));
    }
  return RegionComplex::make(std::move(pts), std::move(segs), std::move(cells));
}

std::vector<BallN> parse_balls(const std::string& text) {
  const json j = parse_json(text);
  std::vector<BallN> out;
  for (const auto& b : array(field(j, "balls"), "balls")) {
    BallN ball;
    for (const auto& x : array(field(b, "center"), "center")) ball.center.push_back(rat(x));
    ball.radius = rat(field(b, "radius"));
    if (ball.radius.sign() < 0) throw Error(ErrorCode::ParseError, "negative radius");
    out.push_back(std::move(ball));
  }
  return out;
}

namespace {

// One feature per line keeps golden files readable and diffs small.
std::string compact(const json& j) { return j.dump(); }

std::string feature_list(const char* key, const std::vector<json>& items, bool last) {
  std::string s = std::string("  \"") + key + "\": [";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ",\n    " : "\n    ") + compact(items[i]);
  s += items.empty() ? "]" : "\n  ]";
  return s + (last ? "\n" : ",\n");
}

}  // namespace

std::string region_to_json(const RegionComplex& R) {
  std::vector<json> pts, segs, cells;
  for (const auto& p : R.points()) pts.push_back(point_json(p));
  for (const auto& s : R.segments()) segs.push_back(json::array({point_json(s.a), point_json(s.b)}));
  for (const auto& c : R.cells()) {
    json cell = json::array();
    for (const auto& p : c) cell.push_back(point_json(p));
    cells.push_back(std::move(cell));
  }
  return "{\n" + feature_list("points", pts, false) + feature_list("segments", segs, false) +
         feature_list("cells", cells, true) + "}\n";
}

std::string points_to_json(const std::vector<Point2>& pts) {
  std::vector<json> items;
  for (const auto& p : pts) items.push_back(point_json(p));
  return "{\n" + feature_list("points", items, true) + "}\n";
}

std::string to_string(const PointN& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace tspan
