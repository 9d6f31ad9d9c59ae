#include "tspan/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>

#include "tspan/error.hpp"
#include "tspan/hyperconvex_check.hpp"
#include "tspan/io.hpp"
#include "tspan/region.hpp"
#include "tspan/render.hpp"
#include "tspan/retraction.hpp"
#include "tspan/tight_span.hpp"

namespace tspan {

namespace {

struct VerifyFailure {};

std::vector<Rat> rats(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  for (const auto& x : xs) out.push_back(Rat::parse(x));
  return out;
}

std::string join(const std::vector<Rat>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i].str();
  return s;
}

void maybe_svg(const std::string& path, const RenderSpec& spec, std::ostream& out) {
  if (path.empty()) return;
  write_file(path, render_svg(spec));
  out << "svg: " << path << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tight spans of finite subsets of the l-infinity plane", "tspan"};
  app.require_subcommand(1);
  std::function<int()> action;

  // validate
  std::string metric_path;
  auto* validate = app.add_subcommand("validate", "check the metric axioms of a metric file");
  validate->add_option("--metric", metric_path, "metric JSON file")->required();
  validate->callback([&] {
    action = [&] {
      const std::string text = read_file(metric_path);
      try {
        const FiniteMetric m = parse_metric(text);
        out << "metric: VALID (" << m.size() << " points)\n";
        return 0;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ZeroDenominator ||
            e.code() == ErrorCode::ShapeMismatch || e.code() == ErrorCode::DuplicateLabel)
          throw;
        out << "metric: INVALID " << e.what();
        if (!e.witness().empty()) {
          out << " witness";
          for (auto i : e.witness()) out << ' ' << i;
        }
        out << "\n";
        return 1;
      }
    };
  });

  // embed3
  std::vector<std::string> sides;
  std::string svg_path;
  auto* e3 = app.add_subcommand("embed3", "embed a three-point metric and print its tripod");
  e3->add_option("sides", sides, "d(P2,P3) d(P1,P3) d(P1,P2)")->required()->expected(3);
  e3->add_option("--svg", svg_path, "write the tripod figure");
  e3->callback([&] {
    action = [&] {
      const auto v = rats(sides);
      const auto p = embed3(v[0], v[1], v[2]);
      const TripodModel t = tripod_span(v[0], v[1], v[2]);
      out << "p2=" << p[1] << " p1=" << p[0] << " p3=" << p[2] << "\n";
      out << "legs=" << join({t.legs.begin(), t.legs.end()}) << "\n";
      if (!svg_path.empty()) {
        const std::vector<Point2> X(p.begin(), p.end());
        maybe_svg(svg_path, render_spec(minimal_gch(X), X), out);
      }
      return 0;
    };
  });

  // embed4
  auto* e4 = app.add_subcommand("embed4", "embed a four-point metric and print its rectangle-with-legs");
  e4->add_option("distances", sides, "d23 d13 d12 d14 d24 d34")->required()->expected(6);
  e4->add_option("--svg", svg_path, "write the figure");
  e4->callback([&] {
    action = [&] {
      const auto v = rats(sides);
      const auto p = embed4(v[0], v[1], v[2], v[3], v[4], v[5]);
      const QuadModel q = quad_span(v[0], v[1], v[2], v[3], v[4], v[5]);
      out << "p1=" << p[0] << " p2=" << p[1] << " p3=" << p[2] << " p4=" << p[3] << "\n";
      out << "labeling=";
      for (std::size_t i = 0; i < 4; ++i) out << (i ? "," : "") << "P" << q.perm[i] + 1;
      out << "\n";
      out << "lengths=" << join({q.lengths.begin(), q.lengths.end()}) << "\n";
      out << "rectangle=" << q.width << "x" << q.height << "\n";
      out << "distances: OK\n";
      if (!svg_path.empty()) {
        const std::vector<Point2> X(p.begin(), p.end());
        maybe_svg(svg_path, render_spec(minimal_gch(X), X), out);
      }
      return 0;
    };
  });

  // span
  std::string points_path, out_path;
  std::size_t verify_n = 0;
  std::uint64_t seed = 1;
  auto* span = app.add_subcommand("span", "minimal closed geodesically convex hull of a point file");
  span->add_option("--points", points_path, "points JSON file")->required();
  span->add_option("--verify", verify_n, "isometry check with this many sampled pairs");
  span->add_option("--seed", seed, "seed for every sampled check");
  span->add_option("--out", out_path, "write the region JSON here instead of stdout");
  span->add_option("--svg", svg_path, "write the region figure");
  span->callback([&] {
    action = [&] {
      const auto X = parse_points(read_file(points_path));
      if (X.empty()) throw Error(ErrorCode::ParseError, "--points: no points in file");
      const GchResult g = minimal_gch_detailed(X);
      const std::string doc = region_to_json(g.region);
      if (out_path.empty()) {
        out << doc;
      } else {
        write_file(out_path, doc);
        out << "region: " << out_path << "\n";
      }
      out << "features: " << g.region.points().size() << " points, " << g.region.segments().size() << " segments, "
          << g.region.cells().size() << " cells, " << g.bridges.size() << " bridge pieces\n";
      maybe_svg(svg_path, render_spec(g.region, X), out);
      if (verify_n > 0) {
        const IsometryReport rep = check_isometry(g.region, X, verify_n, seed);
        if (!rep.pass) {
          out << "isometry: FAIL check=" << rep.failed_check << " y=" << *rep.y;
          if (rep.z) out << " z=" << *rep.z;
          out << "\n";
          return 1;
        }
        out << "isometry: PASS (" << rep.points_checked << " points, " << rep.pairs_checked << " pairs)\n";
      }
      return 0;
    };
  });

  // retract
  std::string region_path;
  std::vector<std::string> pt;
  std::size_t samples = 100;
  auto* retract = app.add_subcommand("retract", "retract a point onto a region");
  retract->add_option("--region", region_path, "region JSON file")->required();
  retract->add_option("--point", pt, "x y")->required()->expected(2)->allow_extra_args(false);
  retract->add_option("--verify", samples, "samples for the nonexpansiveness check");
  retract->add_option("--seed", seed, "sample seed");
  retract->callback([&] {
    action = [&] {
      const RegionComplex A = parse_region(read_file(region_path));
      const auto v = rats(pt);
      const Point2 p{v[0], v[1]};
      const RetractionTrace tr = retract_point(A, p);
      for (std::size_t i = 0; i < tr.steps.size(); ++i)
        out << "step " << i + 1 << ": " << tr.steps[i].point << " " << to_string(tr.steps[i].tag) << "\n";
      out << "target: " << tr.target << "\n";
      const auto chain = tr.chain();
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const NonexpansiveReport step = check_step(A, chain[i], chain[i + 1], samples, seed);
        if (!step.ok) {
          out << "step " << i + 1 << ": FAIL witness=" << *step.witness << "\n";
          return 1;
        }
      }
      const NonexpansiveReport rep = verify_nonexpansive(A, p, tr.target, samples, seed);
      if (!rep.ok) {
        out << "nonexpansive: FAIL witness=" << *rep.witness << "\n";
        return 1;
      }
      out << "nonexpansive: PASS\n";
      return 0;
    };
  });

  // helly
  std::string balls_path;
  auto* helly = app.add_subcommand("helly", "ball intersection test");
  helly->add_option("--balls", balls_path, "balls JSON file")->required();
  helly->add_option("--region", region_path, "restrict to a planar region");
  helly->callback([&] {
    action = [&] {
      const auto balls = parse_balls(read_file(balls_path));
      const bool compat = balls_compatible(balls);
      out << "compatible: " << (compat ? "yes" : "no") << "\n";
      const auto box = boxes_intersect(balls);
      out << "box intersection: " << (box ? to_string(*box) : std::string("EMPTY")) << "\n";
      bool fail = compat && !box;
      if (!region_path.empty()) {
        const RegionComplex R = parse_region(read_file(region_path));
        const auto w = region_balls_intersect(R, balls);
        out << "region intersection: " << (w ? to_string(*w) : std::string("EMPTY")) << "\n";
        bool centers_in = true;
        for (const auto& b : balls) centers_in = centers_in && R.contains({b.center.at(0), b.center.at(1)});
        if (compat && centers_in && !w && is_geodesically_convex(R).convex) fail = true;
      }
      return fail ? 1 : 0;
    };
  });

  // counterexample
  std::string which;
  std::string scale_text = "1";
  auto* cex = app.add_subcommand("counterexample", "certify the three-dimensional counterexamples");
  cex->add_option("which", which, "hexagons | fig25")->required()->check(CLI::IsMember({"hexagons", "fig25"}));
  cex->add_option("--scale", scale_text, "scale factor for the hexagon configuration");
  cex->add_option("--svg", svg_path, "write the hexagon figure");
  cex->callback([&] {
    action = [&] {
      if (which == "hexagons") {
        const HexagonReport rep = hexagon_counterexample(Rat::parse(scale_text));
        for (std::size_t i = 0; i < 3; ++i)
          out << "ball " << i + 1 << ": center " << to_string(rep.balls[i].center) << " radius " << rep.balls[i].radius
              << "\n";
        out << "compatible: " << (rep.compatible ? "yes" : "no") << "\n";
        const char* names[] = {"1-2", "1-3", "2-3"};
        bool ok = rep.compatible;
        for (std::size_t k = 0; k < 3; ++k) {
          out << "pair " << names[k] << ": " << (rep.pairwise[k] ? to_string(*rep.pairwise[k]) : std::string("EMPTY"))
              << "\n";
          ok = ok && rep.pairwise[k].has_value();
        }
        out << "triple: " << (rep.triple ? to_string(*rep.triple) : std::string("EMPTY")) << "\n";
        out << "triple without the plane: "
            << (rep.triple_in_space ? to_string(*rep.triple_in_space) : std::string("EMPTY")) << "\n";
        ok = ok && !rep.triple && rep.triple_in_space;
        maybe_svg(svg_path, render_spec(rep), out);
        out << "certificate: " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
      }
      const Fig25Fixture fx = fig25_fixture();
      out << "A=" << to_string(fx.X[0]) << " B=" << to_string(fx.X[1]) << " C=" << to_string(fx.X[2]) << "\n";
      out << "d(A,B)=" << fx.dAB << " d(A,C)=" << fx.dAC << " d(B,C)=" << fx.dBC << "\n";
      out << "d(N,A)=" << fx.dNA << " d(N,C)=" << fx.dNC << "\n";
      out << "coplanar: " << (fx.coplanar ? "yes" : "no") << "\n";
      out << "tripod legs=" << join({fx.legs.begin(), fx.legs.end()}) << "\n";
      const auto w = fig25_nonisometry_witness();
      if (!w) {
        out << "non-isometry witness: NONE\n";
        return 1;
      }
      if (w->non_tight) {
        out << "non-isometry witness: " << to_string(w->y) << " has a non-tight image\n";
      } else {
        out << "non-isometry witness: " << to_string(w->y) << " " << to_string(w->z) << " distance " << w->dy_z
            << " image distance " << w->dphi << "\n";
      }
      return 0;
    };
  });

  // render
  std::string sites_path;
  auto* render = app.add_subcommand("render", "draw a region as SVG");
  render->add_option("--region", region_path, "region JSON file")->required();
  render->add_option("--points", sites_path, "sites to mark");
  render->add_option("--svg", svg_path, "output path (default: stdout)");
  render->callback([&] {
    action = [&] {
      const RegionComplex R = parse_region(read_file(region_path));
      std::vector<Point2> sites;
      if (!sites_path.empty()) sites = parse_points(read_file(sites_path));
      const std::string doc = render_svg(render_spec(R, sites));
      if (svg_path.empty()) out << doc;
      else maybe_svg(svg_path, render_spec(R, sites), out);
      return 0;
    };
  });

  // oracle
  std::vector<std::string> fvals;
  auto* oracle = app.add_subcommand("oracle", "Dress tight-span membership test");
  oracle->add_option("--metric", metric_path, "metric JSON file")->required();
  oracle->add_option("--function", fvals, "one rational per label")->required()->expected(1, -1);
  oracle->callback([&] {
    action = [&] {
      const FiniteMetric M = parse_metric(read_file(metric_path));
      const auto f = rats(fvals);
      const bool tight = is_tight_point(M, f);
      out << (tight ? "tight" : "non-tight") << (is_feasible(M, f) ? "" : " (infeasible)") << "\n";
      const auto g = gap_table(M, f);
      for (std::size_t i = 0; i < M.size(); ++i) out << M.label(i) << ": " << join(g[i], " ") << "\n";
      return 0;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tspan
