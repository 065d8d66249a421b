#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "nalg/cli.hpp"
#include "nalg/constructions.hpp"
#include "nalg/json_io.hpp"

using namespace nalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  return {c, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("nalg_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("build ealg writes a rational file of the right size") {
  auto p = file("e4.json");
  CHECK(run({"build", "ealg", "--n", "4", "-o", p}).code == cli::ok);
  json j = read_json_file(p);
  CHECK(j["dim"] == 4);
  CHECK(j["scalar"] == "rational");
  auto r = run({"report", p});
  CHECK(r.code == cli::ok);
  CHECK(r.j()["dim"] == 4);
  CHECK(r.j()["schema"] == 1);
}

TEST_CASE("round trip keeps structure constants") {
  auto a = file("h0a.json"), b = file("h0b.json");
  REQUIRE(run({"build", "herm0", "--n", "3", "--level", "c", "-o", a}).code == cli::ok);
  REQUIRE(run({"build", "herm0", "--n", "3", "--level", "c", "-o", b}).code == cli::ok);
  CHECK(slurp(a) == slurp(b));
  auto loaded = algebra_from_json<Q>(read_json_file(a));
  auto direct = build_by_name<Q>("herm0", BuildParams{3, 2, "1/2", 2});
  CHECK(loaded.alg == direct.alg);
  CHECK(loaded.h == direct.h);
}

TEST_CASE("check on E^4 passes exact, killing-invariant and simple") {
  auto p = file("e4c.json");
  REQUIRE(run({"build", "ealg", "--n", "4", "-o", p}).code == cli::ok);
  auto r = run({"check", p, "--suite", "exact,killing-invariant,simple"});
  CHECK(r.code == cli::ok);
  json j = r.j();
  CHECK(j["verdict"] == true);
  REQUIRE(j["reports"].size() == 3);
  for (const auto& rep : j["reports"]) CHECK(rep["verdict"] == true);
}

TEST_CASE("failed verification exits 1") {
  auto p = file("herm.json");
  REQUIRE(run({"build", "herm", "--n", "3", "-o", p}).code == cli::ok);
  // unital, so tr L(I) != 0
  auto r = run({"check", p, "--suite", "exact"});
  CHECK(r.code == cli::failed);
  CHECK(r.j()["verdict"] == false);
}

TEST_CASE("report on octonionic herm0(3) carries kappa 7") {
  auto p = file("h0o.json");
  REQUIRE(run({"build", "herm0", "--n", "3", "--level", "o", "-o", p}).code == cli::ok);
  auto r = run({"report", p});
  REQUIRE(r.code == cli::ok);
  CHECK(r.j()["einstein_kappa"] == "7");
  CHECK(r.j()["dim"] == 26);
}

TEST_CASE("constructions compose through files") {
  auto e2 = file("e2.json"), t = file("e2e2.json");
  REQUIRE(run({"build", "ealg", "--n", "2", "-o", e2}).code == cli::ok);
  REQUIRE(run({"construct", "tensor", e2, e2, "-o", t}).code == cli::ok);
  CHECK(read_json_file(t)["dim"] == 4);
  auto d = run({"decompose", t, "--seed", "3"});
  CHECK(d.code == cli::ok);
  CHECK(d.j()["verdict"] == 2);
  auto tr = run({"construct", "triple", e2});
  CHECK(tr.code == cli::ok);
  CHECK(tr.j()["dim"] == 6);
}

TEST_CASE("usage errors exit 2") {
  auto e2 = file("e2u.json");
  REQUIRE(run({"build", "ealg", "--n", "2", "-o", e2}).code == cli::ok);
  CHECK(run({}).code == cli::usage);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({"build", "ealg", "--bogus"}).code == cli::usage);
  CHECK(run({"build", "nosuch"}).code == cli::usage);
  CHECK(run({"build", "herm", "--level", "x"}).code == cli::usage);
  CHECK(run({"report", file("missing.json")}).code == cli::usage);
  CHECK(run({"check", e2, "--suite", "nosuch"}).code == cli::usage);
  CHECK(run({"construct", "tensor", e2}).code == cli::usage);
  CHECK(run({"construct", "nosuch", e2}).code == cli::usage);
  // stochastic subcommands need a seed
  CHECK(run({"idempotents", e2}).code == cli::usage);
  CHECK(run({"sect", e2}).code == cli::usage);
  CHECK(run({"decompose", e2}).code == cli::usage);

  auto bad = file("bad.json");
  std::ofstream(bad) << "{\"dim\": 2, \"structure\": [";
  auto r = run({"report", bad});
  CHECK(r.code == cli::usage);
  CHECK(r.err.find("malformed") != std::string::npos);
}

TEST_CASE("identical seeds give identical stochastic output") {
  auto e3 = file("e3.json");
  REQUIRE(run({"build", "ealg", "--n", "3", "-o", e3}).code == cli::ok);
  auto a = run({"idempotents", e3, "--seed", "9", "--trials", "300"});
  auto b = run({"idempotents", e3, "--seed", "9", "--trials", "300"});
  REQUIRE(a.code == cli::ok);
  CHECK(a.out == b.out);
  // |I| = 2 of 3 gives square-zero rays instead of idempotents
  CHECK(a.j()["verdict"]["idempotents"] == 4);
  CHECK(a.j()["verdict"]["square_zero_rays"] == 3);

  auto s = run({"sect", e3, "--seed", "4", "--samples", "100", "--steps", "30"});
  auto t = run({"sect", e3, "--seed", "4", "--samples", "100", "--steps", "30"});
  REQUIRE(s.code == cli::ok);
  CHECK(s.out == t.out);
  CHECK(s.j()["seed"] == 4);
}

TEST_CASE("float backend round trips") {
  auto p = file("e3f.json");
  REQUIRE(run({"build", "ealg", "--n", "3", "--scalar", "float", "-o", p}).code == cli::ok);
  CHECK(read_json_file(p)["scalar"] == "float");
  auto r = run({"check", p, "--suite", "exact,nondegenerate,einstein"});
  CHECK(r.code == cli::ok);
}

TEST_CASE("suite names") {
  auto s = cli::suite_names();
  for (const char* n : {"exact", "killing-invariant", "ricci-invariant", "nondegenerate", "einstein", "proj-assoc",
                        "conf-assoc", "norton", "const-sect", "ideals"})
    CHECK(std::find(s.begin(), s.end(), n) != s.end());
}
