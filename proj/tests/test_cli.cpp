#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "tspan/cli.hpp"
#include "tspan/error.hpp"
#include "tspan/io.hpp"
#include "tspan/render.hpp"
#include "tspan/tight_span.hpp"

using namespace tspan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(TSPAN_FIXTURES) + "/" + name; }

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tspan_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }
  std::string write(const char* name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }
  fs::path dir_;
};

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_F(Cli, Embed3) {
  const auto r = run({"embed3", "3", "2", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p2=(0,0) p1=(0,3) p3=(2,3)\nlegs=1,2,1\n");
  EXPECT_EQ(run({"embed3", "1", "1", "5"}).code, 2);
  EXPECT_EQ(run({"embed3", "1", "1"}).code, 2);
}

TEST_F(Cli, Embed4) {
  const auto r = run({"embed4", "4", "3", "3", "3", "3", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p1=(0,3) p2=(0,0) p3=(3,4) p4=(3,2)\n"), std::string::npos);
  EXPECT_NE(r.out.find("lengths=3/2,1,1/2,1/2,1,1\n"), std::string::npos);
  EXPECT_NE(r.out.find("rectangle=1x1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("distances: OK\n"), std::string::npos);
}

TEST_F(Cli, RationalArgumentsIncludingNegatives) {
  const auto reg = write("sq.json", R"({"cells":[[["0","0"],["1","0"],["1","1"],["0","1"]]]})");
  const auto r = run({"retract", "--region", reg, "--point", "-1/5", "1/2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("step 1: (-1/5,1/2) three_sector\n"), std::string::npos);
  EXPECT_NE(r.out.find("target: (0,1/2)\n"), std::string::npos);
  EXPECT_NE(r.out.find("nonexpansive: PASS\n"), std::string::npos);
  EXPECT_EQ(run({"retract", "--region", reg, "--point", "1/0", "0"}).code, 2);
}

TEST_F(Cli, SpanVerificationAndRoundTrip) {
  const auto r = run({"span", "--points", fixture("tri.json"), "--verify", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("isometry: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("features: 0 points, 3 segments, 0 cells"), std::string::npos);

  const auto out = path("span.json");
  ASSERT_EQ(run({"span", "--points", fixture("quad.json"), "--out", out}).code, 0);
  const auto R = parse_region(read_file(out));
  EXPECT_EQ(region_to_json(R), read_file(out));
  std::array<Point2, 4> tips;
  const auto p = embed4(4, 3, 3, 3, 3, 2);
  EXPECT_EQ(R, minimal_gch({p.begin(), p.end()}));
  (void)tips;

  const auto rr = run({"retract", "--region", out, "--point", "-1", "5"});
  EXPECT_EQ(rr.code, 0) << rr.err;
  EXPECT_NE(rr.out.find("nonexpansive: PASS"), std::string::npos);
  const auto rs = run({"render", "--region", out, "--points", fixture("quad.json")});
  EXPECT_EQ(rs.code, 0) << rs.err;
  EXPECT_EQ(count(rs.out, "class=\"cell\""), 1u);
  EXPECT_EQ(count(rs.out, "class=\"segment\""), 4u);
  EXPECT_EQ(count(rs.out, "class=\"site\""), 4u);
}

TEST_F(Cli, ValidateAndOracle) {
  const auto good = write("m.json", R"({"labels":["P1","P2","P3"],"dist":[["0","3","2"],["3","0","3"],["2","3","0"]]})");
  const auto bad = write("b.json", R"({"labels":["a","b","c"],"dist":[[0,1,5],[1,0,1],[5,1,0]]})");
  EXPECT_EQ(run({"validate", "--metric", good}).out, "metric: VALID (3 points)\n");
  const auto b = run({"validate", "--metric", bad});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.out.find("INVALID"), std::string::npos);
  EXPECT_NE(b.out.find("witness"), std::string::npos);
  const auto t = run({"oracle", "--metric", good, "--function", "1", "2", "1"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.substr(0, 6), "tight\n");
  EXPECT_EQ(run({"oracle", "--metric", good, "--function", "2", "2", "2"}).out.substr(0, 10), "non-tight\n");
}

TEST_F(Cli, Helly) {
  const auto balls = write("balls.json", R"({"balls":[{"center":["0","3"],"radius":"1"},
    {"center":["0","0"],"radius":"2"},{"center":["2","3"],"radius":"1"}]})");
  const auto reg = path("tri_span.json");
  ASSERT_EQ(run({"span", "--points", fixture("tri.json"), "--out", reg}).code, 0);
  const auto r = run({"helly", "--balls", balls, "--region", reg});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("compatible: yes"), std::string::npos);
  EXPECT_NE(r.out.find("region intersection: (1,2)"), std::string::npos);
}

TEST_F(Cli, Counterexamples) {
  const auto h = run({"counterexample", "hexagons"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("(1/2,1/2,-1)"), std::string::npos);
  EXPECT_NE(h.out.find("triple: EMPTY"), std::string::npos);
  EXPECT_NE(h.out.find("certificate: PASS"), std::string::npos);
  const auto f = run({"counterexample", "fig25"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("d(A,B)=3 d(A,C)=2 d(B,C)=3"), std::string::npos);
  EXPECT_NE(f.out.find("d(N,A)=4/3 d(N,C)=2/3"), std::string::npos);
  EXPECT_EQ(f.out.find("witness: NONE"), std::string::npos);
  EXPECT_EQ(run({"counterexample", "cubes"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto r = run({"span"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--points"), std::string::npos);
  EXPECT_EQ(run({"span", "--points", path("missing.json")}).code, 2);
  const auto junk = write("junk.json", "{not json");
  EXPECT_EQ(run({"render", "--region", junk}).code, 2);
}

TEST_F(Cli, Determinism) {
  const auto svg1 = path("a.svg"), svg2 = path("b.svg");
  const std::vector<std::vector<std::string>> cmds{
      {"embed3", "3", "2", "3"},
      {"embed4", "4", "3", "3", "3", "3", "2"},
      {"span", "--points", fixture("quad.json"), "--verify", "200", "--seed", "11"},
      {"counterexample", "hexagons"},
      {"counterexample", "fig25"},
  };
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
  auto with_svg = [&](const std::string& svg) {
    return run({"span", "--points", fixture("tri.json"), "--svg", svg, "--seed", "3", "--verify", "50"});
  };
  with_svg(svg1);
  with_svg(svg2);
  EXPECT_EQ(read_file(svg1), read_file(svg2));
}

TEST(Render, TripodHasThreeSegmentsMeetingAtOnePoint) {
  const auto p = embed3(3, 2, 3);
  const auto svg = render_svg(render_spec(minimal_gch({p.begin(), p.end()}), {p.begin(), p.end()}));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "class=\"segment\""), 3u);
  EXPECT_EQ(count(svg, "class=\"cell\""), 0u);
  EXPECT_EQ(count(svg, "class=\"site\""), 3u);
  // the model drawing keeps the three legs apart; they share the branch point
  const auto model = render_svg(render_spec(tripod_span(3, 2, 3)));
  EXPECT_EQ(count(model, "class=\"segment\""), 3u);
  std::regex exact("class=\"segment\"[^>]*data-exact=\"([^ \"]*) [^\"]*\"");
  std::set<std::string> starts;
  std::size_t n = 0;
  for (std::sregex_iterator it(model.begin(), model.end(), exact), end; it != end; ++it, ++n) starts.insert((*it)[1]);
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(starts, (std::set<std::string>{"(0,0)"}));
}

TEST(Render, QuadHasOneCellAndFourLegs) {
  const auto svg = render_svg(render_spec(quad_span(4, 3, 3, 3, 3, 2)));
  EXPECT_EQ(count(svg, "class=\"cell\""), 1u);
  EXPECT_EQ(count(svg, "class=\"segment\""), 4u);
}

TEST(Render, HexagonsAreOutlines) {
  const auto svg = render_svg(render_spec(hexagon_counterexample()));
  EXPECT_EQ(count(svg, "class=\"outline\""), 3u);
}

TEST(Render, EmptyTarget) {
  try {
    render_svg(RenderSpec{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyTarget);
  }
  auto spec = render_spec(RegionComplex::make({{0, 0}}, {}, {}));
  spec.viewport = Viewport{1, 1, 1, 2};
  EXPECT_THROW(render_svg(spec), Error);
}
