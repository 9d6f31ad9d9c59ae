#include "tspan/render.hpp"

#include <sstream>

#include "tspan/error.hpp"

namespace tspan {

namespace {

constexpr int kDigits = 6;

std::string num(const Rat& r) { return to_decimal(r, kDigits); }

// SVG y grows downward.
std::string xy(const Point2& p) { return num(p.x) + "," + num(-p.y); }

std::string exact(const std::vector<Point2>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + to_string(pts[i]);
  return s;
}

Viewport bounding(const RenderSpec& spec) {
  std::vector<Point2> all = spec.region.vertices();
  all.insert(all.end(), spec.sites.begin(), spec.sites.end());
  for (const auto& o : spec.outlines) all.insert(all.end(), o.begin(), o.end());
  for (const auto& l : spec.legs) all.insert(all.end(), {l.a, l.b});
  if (all.empty()) throw Error(ErrorCode::EmptyTarget, "nothing to render");
  Viewport v{all[0].x, all[0].y, all[0].x, all[0].y};
  for (const auto& p : all) {
    v.xmin = min(v.xmin, p.x);
    v.ymin = min(v.ymin, p.y);
    v.xmax = max(v.xmax, p.x);
    v.ymax = max(v.ymax, p.y);
  }
  Rat pad = max(v.xmax - v.xmin, v.ymax - v.ymin) / Rat(10);
  if (pad.is_zero()) pad = 1;
  return {v.xmin - pad, v.ymin - pad, v.xmax + pad, v.ymax + pad};
}

}  // namespace

RenderSpec render_spec(const RegionComplex& R, std::vector<Point2> sites) {
  RenderSpec s;
  s.region = R;
  s.sites = std::move(sites);
  return s;
}

RenderSpec render_spec(const TripodModel& m) {
  const auto lay = tripod_layout(m);
  RenderSpec s;
  s.legs = lay.legs;
  for (const auto& l : lay.legs) s.sites.push_back(l.b);
  s.title = "tripod";
  return s;
}

RenderSpec render_spec(const QuadModel& m) {
  const auto lay = quad_layout(m);
  RenderSpec s;
  s.region = lay.core;
  s.legs = lay.legs;
  for (const auto& l : lay.legs) s.sites.push_back(l.b);
  s.title = "rectangle with legs";
  return s;
}

RenderSpec render_spec(const HexagonReport& rep) {
  RenderSpec s;
  for (const auto& b : rep.balls) {
    s.outlines.push_back(plane_hexagon(b.center, b.radius).chart());
    s.sites.push_back(space_to_chart(b.center));
  }
  for (const auto& w : rep.pairwise)
    if (w) s.sites.push_back(space_to_chart(*w));
  s.title = "pairwise intersecting hexagons";
  return s;
}

std::string render_svg(const RenderSpec& spec) {
  const Viewport v = spec.viewport ? *spec.viewport : bounding(spec);
  if (v.xmax <= v.xmin || v.ymax <= v.ymin) throw Error(ErrorCode::EmptyTarget, "empty viewport");
  if (spec.region.empty() && spec.sites.empty() && spec.outlines.empty() && spec.legs.empty())
    throw Error(ErrorCode::EmptyTarget, "nothing to render");

  const Rat w = v.xmax - v.xmin;
  const Rat h = v.ymax - v.ymin;
  const Rat stroke = max(w, h) / Rat(100);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(v.xmin) << ' ' << num(-v.ymax) << ' ' << num(w)
     << ' ' << num(h) << "\" width=\"600\" height=\"" << num(Rat(600) * h / w) << "\">\n";
  os << "<style>.cell{fill:#bcd;stroke:#234;stroke-width:" << num(stroke / Rat(2)) << "}"
     << ".segment{stroke:#123;stroke-width:" << num(stroke * Rat(3, 2)) << ";stroke-linecap:round}"
     << ".outline{fill:none;stroke:#633;stroke-width:" << num(stroke / Rat(2)) << "}"
     << ".point{fill:#123}.site{fill:#c22}</style>\n";
  if (!spec.title.empty()) os << "<title>" << spec.title << "</title>\n";
  const std::string r = num(stroke * Rat(2));

  for (const auto& c : spec.region.cells()) {
    os << "<polygon class=\"cell\" points=\"";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << xy(c[i]);
    os << "\" data-exact=\"" << exact(c) << "\"/>\n";
  }
  for (const auto& o : spec.outlines) {
    os << "<polygon class=\"outline\" points=\"";
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? " " : "") << xy(o[i]);
    os << "\" data-exact=\"" << exact(o) << "\"/>\n";
  }
  std::vector<Segment> strokes = spec.region.segments();
  for (const auto& l : spec.legs)
    if (l.a != l.b) strokes.push_back(l);
  for (const auto& s : strokes) {
    os << "<line class=\"segment\" x1=\"" << num(s.a.x) << "\" y1=\"" << num(-s.a.y) << "\" x2=\"" << num(s.b.x)
       << "\" y2=\"" << num(-s.b.y) << "\" data-exact=\"" << exact({s.a, s.b}) << "\"/>\n";
  }
  for (const auto& p : spec.region.points())
    os << "<circle class=\"point\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << r
       << "\" data-exact=\"" << to_string(p) << "\"/>\n";
  for (const auto& p : spec.sites)
    os << "<circle class=\"site\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << r
       << "\" data-exact=\"" << to_string(p) << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tspan
