#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "slicereg/io.hpp"

using slicereg::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return std::string(SLICEREG_EXAMPLES) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "slicereg_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// Runs the CLI with a shell-quoted argument string.
Run run(const std::string& args, const std::string& env = "") {
  const auto err_path = scratch("stderr.txt");
  const std::string cmd = env + " '" + std::string(SLICEREG_CLI) + "' " + args + " 2>'" + err_path.string() + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("eval", "[cli]") {
  const auto r = run("eval -p '" + data("cex.json") + "' -q '[0,1,0,0]'");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  for (const auto& v : j["value"]) CHECK(std::abs(v.get<double>()) == 0.0);

  const auto m = run("eval -p '" + data("monomial3.json") + "' -q '[1,0,0,0]'");
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["value"] == json::parse("[0,0,0,2]"));

  // inline polynomial JSON
  const auto inl = run("eval -p '[[1,0,0,0],[0,1,0,0]]' -q '[2,0,0,0]'");
  REQUIRE(inl.code == 0);
  CHECK(json::parse(inl.out)["value"] == json::parse("[1,2,0,0]"));

  const auto cl = run("eval -p '" + data("clifford2.json") + "' -q '[0.5,0,1,0]'");
  REQUIRE(cl.code == 0);
  CHECK(json::parse(cl.out)["value"]["m"] == 2);
}

TEST_CASE("parse and domain errors", "[cli]") {
  const auto bad = run("eval -p '" + data("malformed.json") + "' -q '[0,1,0,0]'");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("malformed.json:2:") != std::string::npos);

  CHECK(run("eval -p '" + data("cex.json") + "' -q '[0,1,0]'").code == 2);
  CHECK(run("eval -p /nonexistent/file.json -q '[0,1,0,0]'").code == 2);
  CHECK(run("check nope -p '" + data("cex.json") + "'").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("kernel -n 4").code == 2);
  CHECK(run("fuzz --check bernstein --deg 3..x").code == 2);
  CHECK(run("fuzz --check bernstein --algebra sedenion").code == 2);

  // a blade of grade two is not a paravector
  const auto np = run("eval -p '" + data("clifford2.json") + "' -q '[0,0,0,1]'");
  CHECK(np.code == 3);
  CHECK(np.err.find("paravector") != std::string::npos);
  CHECK(run("zeros -p '" + data("clifford2.json") + "'").code == 3);
  CHECK(run("check bernstein -p '[[1,0,0,0]]'").code == 3);
  CHECK(run("check ankeny-growth -p '" + data("half_plus_qn.json") + "' -R 0.5").code == 3);
  CHECK(run("fuzz --check erdos-lax --algebra octonion --constraint zeros-outside --trials 2").code == 3);
}

TEST_CASE("check", "[cli]") {
  const auto b = run("check bernstein -p '" + data("monomial3.json") + "'");
  REQUIRE(b.code == 0);
  const json jb = json::parse(b.out);
  CHECK(jb["schema"] == "report_v1");
  CHECK(jb["holds"] == true);
  CHECK(jb["equality_case"] == true);
  CHECK(jb["config_hash"].get<std::string>().size() == 16);

  const auto e = run("check erdos-lax -p '" + data("cex.json") + "'");
  REQUIRE(e.code == 0);
  const json je = json::parse(e.out);
  CHECK(je["preconditions_met"] == false);
  CHECK(std::abs(je["ratio"].get<double>() - 1.2071067811865475) <= 1e-6);

  const auto a = run("check ankeny-growth -p '" + data("half_plus_qn.json") + "' -R 2");
  REQUIRE(a.code == 0);
  const json ja = json::parse(a.out);
  CHECK(ja["equality_case"] == true);
  CHECK(std::abs(ja["lhs"].get<double>() - 4.5) <= 1e-8);

  const auto l = run("check lax-ratio --zeros '[[0.9,0]]' --theta 0");
  REQUIRE(l.code == 0);
  CHECK(std::abs(json::parse(l.out)["rhs"].get<double>() - 10.0) <= 1e-12);

  const auto c = run("check ankeny-converse -p '" + data("half_plus_qn.json") + "' --delta 2");
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["preconditions_met"] == true);

  // with zero tolerance the last-bit roundoff of an equality case counts as a violation
  const auto v = run("check bernstein -p '" + data("monomial11.json") + "' --rel-tol 0 --abs-tol 0");
  CHECK(v.code == 1);
  CHECK(json::parse(v.out)["holds"] == false);
  CHECK(run("check bernstein -p '" + data("monomial11.json") + "'").code == 0);

  // identical configs hash identically, different tolerances do not
  const auto b2 = run("check bernstein -p '" + data("monomial3.json") + "'");
  CHECK(b2.out == b.out);
  const auto b3 = run("check bernstein -p '" + data("monomial3.json") + "' --rel-tol 1e-6");
  CHECK(json::parse(b3.out)["config_hash"] != jb["config_hash"]);
}

TEST_CASE("norm and zeros", "[cli]") {
  const auto n = run("norm -p '" + data("cex.json") + "' -R 1");
  REQUIRE(n.code == 0);
  const json jn = json::parse(n.out);
  CHECK(std::abs(jn["value"].get<double>() - 2.0 * std::sqrt(2.0)) <= 1e-9);
  CHECK(jn["witness"].size() == 4);
  CHECK(jn.contains("tol"));

  const auto m = run("norm -p '" + data("sphere.json") + "' --min");
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["value"].get<double>() <= 1e-9);

  const auto z = run("zeros -p '" + data("cex.json") + "'");
  REQUIRE(z.code == 0);
  const json jz = json::parse(z.out);
  REQUIRE(jz["isolated_zeros"].size() == 1);
  CHECK(jz["isolated_zeros"][0]["multiplicity"] == 2);
  CHECK(jz["total_multiplicity"] == 2);

  const auto s = run("zeros -p '" + data("sphere.json") + "'");
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["spherical_zeros"].size() == 1);
}

TEST_CASE("kernel", "[cli]") {
  const auto k = run("kernel --fejer -n 8 --nodes 512");
  REQUIRE(k.code == 0);
  std::istringstream in(k.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,value");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::stod(line.substr(line.find(',') + 1)) >= 0.0);
  }
  CHECK(rows == 512);

  const auto d = run("kernel --dirichlet -n 3 --nodes 4");
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("x,value\n0,7\n", 0) == 0);
}

TEST_CASE("fuzz", "[cli]") {
  const auto f = run("fuzz --check bernstein --trials 1000 --seed 42 --deg 1..12");
  REQUIRE(f.code == 0);
  CHECK(count_lines(f.out) == 1002);
  CHECK(f.out.rfind("# config_hash=", 0) == 0);
  const json summary = json::parse(f.err);
  CHECK(summary["schema"] == "campaign_v1");
  CHECK(summary["summary"]["violations"] == 0);
  CHECK(summary["summary"]["trials"] == 1000);
  CHECK(summary["extremal_witness"]["algebra"] == "quaternion");

  // byte-identical output across runs and thread counts
  const auto a = scratch("a.csv"), b = scratch("b.csv"), c = scratch("c.csv");
  const auto w = scratch("w.json"), s = scratch("s.json");
  REQUIRE(run("fuzz --check bernstein --trials 100 --seed 7 -o '" + a.string() + "'").code == 0);
  REQUIRE(run("fuzz --check bernstein --trials 100 --seed 7 -o '" + b.string() + "'").code == 0);
  REQUIRE(run("fuzz --check bernstein --trials 100 --seed 7 --threads 4 -o '" + c.string() + "' --witness '" +
              w.string() + "' --summary '" + s.string() + "'")
              .code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == slurp(c));
  CHECK(run("fuzz --check bernstein --trials 100 --seed 7", "SLICEREG_THREADS=3").out == slurp(a));
  CHECK(json::parse(slurp(w))["coeffs"].is_array());
  CHECK(json::parse(slurp(s))["summary"]["trials"] == 100);
  CHECK(run("fuzz --check bernstein --trials 100 --seed 8").out != slurp(a));

  const auto e = run("fuzz --check erdos-lax --trials 50 --seed 3 --deg 1..8");
  REQUIRE(e.code == 0);
  CHECK(json::parse(e.err)["config"]["constraint"] == "zeros-outside");

  const auto m = run("fuzz --check bernstein --trials 20 --seed 1 --deg 3 --constraint monomial");
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.err)["summary"]["equality_cases"] == 20);

  for (const std::string alg : {"octonion", "clifford2", "clifford3"}) {
    const auto r = run("fuzz --check bernstein --trials 20 --seed 5 --algebra " + alg);
    CHECK(r.code == 0);
    CHECK(json::parse(r.err)["config"]["algebra"] == alg);
  }

  const auto lr = run("fuzz --check lax-ratio --trials 100 --seed 2 --deg 1..20");
  REQUIRE(lr.code == 0);
  CHECK(json::parse(lr.err)["summary"]["holds"] == 100);
}
