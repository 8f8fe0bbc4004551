#include "oracles.hpp"

#include "rcb/cli.hpp"
#include "rcb/gallery.hpp"
#include "rcb/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rcb;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
  static const fs::path dir = [] {
    const char* env = std::getenv("RCB_TEST_TMP");
    fs::path p = env ? fs::path(env) : fs::temp_directory_path() / "rcb_cli_tests";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string path(const std::string& name) { return (tmp_dir() / name).string(); }

std::string write(const std::string& name, const std::string& text) {
  const auto p = path(name);
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CxBezierd read_complex(const std::string& p) { return std::get<CxBezierd>(io::read_curve(p)); }

const char* kQuarterCircle = R"({"kind":"real","polygon":[[1,0],[1,1],[0,1]],"weights":[0.5,0.5,1]})";
const char* kFakeCubic =
    R"({"kind":"real","polygon":[[1,0],[1,0.8],[0.5,1],[0,1]],"weights":[2,1.6666666666666667,1.3333333333333333,1]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce lowers the quarter circle to degree 1") {
  const auto in = write("quarter.json", kQuarterCircle);
  const auto r = run({"reduce", in, "-o", path("quarter_reduced.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("original degree: 2\nreduced degree: 1") != std::string::npos);
  const auto reduced = read_complex(path("quarter_reduced.json"));
  CHECK(reduced.degree() == 1);
  CHECK(equivalent(reduced, io::as_complex(io::parse_curve(kQuarterCircle))));
}

TEST_CASE("reduce takes the fake cubic to a parabola and leaves irreducible curves alone") {
  const auto in = write("fake_cubic.json", kFakeCubic);
  CHECK(run({"reduce", in, "-o", path("fake_reduced.json")}).code == 0);
  CHECK(read_complex(path("fake_reduced.json")).degree() == 2);

  io::write_curve(path("cardioid.json"), cardioid(1.0).inverted);
  const auto r = run({"reduce", path("cardioid.json"), "-o", path("cardioid_reduced.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("reduced degree: 2") != std::string::npos);
}

TEST_CASE("check reports reducibility through the exit code") {
  const auto quarter = run({"check", write("quarter.json", kQuarterCircle)});
  CHECK(quarter.code == 1);
  CHECK(quarter.out.find("irreducible: no") != std::string::npos);
  CHECK(quarter.out.find("status: reducible") != std::string::npos);
  CHECK(quarter.out.find("conic:") == std::string::npos);

  const auto fake = run({"check", write("fake_cubic.json", kFakeCubic)});
  CHECK(fake.code == 1);
  CHECK(fake.out.find("conic: yes") != std::string::npos);

  oracle::Rng rng(70);
  io::write_curve(path("random_cubic.json"), rng.curve(3));
  const auto cubic = run({"check", path("random_cubic.json")});
  CHECK(cubic.code == 0);
  CHECK(cubic.out.find("conic: no") != std::string::npos);
  CHECK(cubic.out.find("status: irreducible") != std::string::npos);
}

TEST_CASE("convert between complex and real forms") {
  const auto in = write("line.json", R"({"kind":"complex","polygon":[[1,0],[0,1]],"weights":[[1,1],[2,0]]})");
  CHECK(run({"convert", in, "to-real", "-o", path("line_real.json")}).code == 0);
  const auto real = std::get<RealBezierd>(io::read_curve(path("line_real.json")));
  REQUIRE(real.degree() == 2);
  CHECK((real.weights() - Eigen::Vector3d(2, 2, 4)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(real.points()(1, 0) - 1) < 1e-12);
  CHECK(std::abs(real.points()(1, 1) - 1) < 1e-12);

  CHECK(run({"convert", path("line_real.json"), "to-complex", "--reduce", "-o", path("line_back.json")}).code == 0);
  const auto back = read_complex(path("line_back.json"));
  CHECK(back.degree() == 1);
  CHECK(equivalent(back, read_complex(in)));

  CHECK(run({"convert", in, "to-complex", "-o", path("x.json")}).code == 2);
  CHECK(run({"convert", in, "sideways", "-o", path("x.json")}).code == 2);
}

TEST_CASE("transform applies one operation") {
  io::write_curve(path("conic.json"), cardioid(1.0).conic);
  const auto conic = read_complex(path("conic.json"));

  CHECK(run({"transform", path("conic.json"), "--invert", "-o", path("inv.json")}).code == 0);
  CHECK(equivalent(read_complex(path("inv.json")), cardioid(1.0).inverted));

  CHECK(run({"transform", path("conic.json"), "--mobius", "1", "0", "0", "1", "-o", path("id.json")}).code == 0);
  CHECK(equivalent(read_complex(path("id.json")), conic));

  CHECK(run({"transform", path("conic.json"), "--mobius", "1,0", "0", "-1,0", "0,2", "-o", path("m.json")}).code == 0);
  const auto m = read_complex(path("m.json"));
  for (double t : {0.1, 0.5, 0.9}) CHECK(oracle::rel_err(eval(m, t), -1.0 + Cx(0, 2) * eval(conic, t)) < 1e-12);

  CHECK(run({"transform", path("conic.json"), "--elevate", "1", "2,1", "-o", path("e.json")}).code == 0);
  CHECK(read_complex(path("e.json")).degree() == 3);
  CHECK(equivalent(read_complex(path("e.json")), conic));

  CHECK(run({"transform", path("conic.json"), "--reparam", "2", "-o", path("r.json")}).code == 0);
  CHECK(run({"transform", path("conic.json"), "--scale", "0,3", "-o", path("s.json")}).code == 0);
  CHECK(equivalent(read_complex(path("s.json")), conic));
}

TEST_CASE("transform errors exit with code 2") {
  io::write_curve(path("conic.json"), cardioid(1.0).conic);
  // z -> 1/z with a control point at the origin.
  io::write_curve(path("origin.json"), CxBezierd(Eigen::Vector2cd(0, 1), Eigen::Vector2cd(1, 1)));
  const auto pole = run({"transform", path("origin.json"), "--invert", "-o", path("x.json")});
  CHECK(pole.code == 2);
  CHECK(pole.err.find("pole") != std::string::npos);
  CHECK(run({"transform", path("conic.json"), "-o", path("x.json")}).code == 2);
  CHECK(run({"transform", path("conic.json"), "--invert", "--reparam", "2", "-o", path("x.json")}).code == 2);
  CHECK(run({"transform", path("conic.json"), "--reparam", "-1", "-o", path("x.json")}).code == 2);
  CHECK(run({"transform", path("conic.json"), "--scale", "0", "-o", path("x.json")}).code == 2);
  CHECK(run({"transform", path("conic.json"), "--scale", "abc", "-o", path("x.json")}).code == 2);
  CHECK(run({"transform", write("real.json", kQuarterCircle), "--invert", "-o", path("x.json")}).code == 2);
}

TEST_CASE("render writes CSV and SVG") {
  const auto in = write("quarter.json", kQuarterCircle);
  CHECK(run({"render", in, "--samples", "100", "--csv", path("q.csv")}).code == 0);
  const auto csv = slurp(path("q.csv"));
  CHECK(csv.rfind("t,x,y\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);

  io::write_curve(path("conic.json"), cardioid(1.0).conic);
  io::write_curve(path("inv.json"), cardioid(1.0).inverted);
  CHECK(run({"render", path("conic.json"), path("inv.json"), "--svg", path("c.svg")}).code == 0);
  const auto svg = slurp(path("c.svg"));
  CHECK(svg.find("<g id=\"curve1\">") != std::string::npos);
  CHECK(run({"render", path("conic.json"), path("inv.json"), "--svg", path("c2.svg")}).code == 0);
  CHECK(slurp(path("c2.svg")) == svg);

  CHECK(run({"render", path("conic.json"), path("inv.json"), "--csv", path("x.csv")}).code == 2);
  CHECK(run({"render", in, "--samples", "1", "--csv", path("x.csv")}).code == 2);
  CHECK(run({"render", in}).code == 2);
}

TEST_CASE("gallery writes the conic and its inversion") {
  for (const std::string name : {"cissoid", "cardioid", "lemniscate"}) {
    CAPTURE(name);
    const auto conic_path = path(name + "_c.json");
    const auto inverted_path = path(name + "_i.json");
    CHECK(run({"gallery", name, "--conic", conic_path, "--inverted", inverted_path}).code == 0);
    const auto conic = read_complex(conic_path);
    const auto inverted = read_complex(inverted_path);
    CHECK(inverted.degree() == 2);
    CHECK(std::abs(eval(conic, 0.3) * eval(inverted, 0.3) - 1.0) < 1e-10);
  }
  CHECK(run({"gallery", "cardioid", "--a", "2", "--conic", path("c2.json"), "--inverted", path("i2.json")}).code == 0);
  CHECK(equivalent(read_complex(path("c2.json")), cardioid(2.0).conic));
  CHECK(run({"gallery", "astroid"}).code == 2);
  CHECK(run({"gallery", "cardioid", "--a", "0", "--conic", path("x.json"), "--inverted", path("y.json")}).code == 2);
}

TEST_CASE("usage errors exit with code 2 and help exits with 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", path("missing.json")}).code == 2);
  CHECK(run({"check", write("garbage.json", "{")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
