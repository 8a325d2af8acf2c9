// Drives the installed binary end to end: writes input files, runs the
// subcommands through the shell, and checks reports and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;
const char* kDir = "cli_scratch";

struct RunResult {
  int code = -1;
  nlohmann::json report;
  std::string stderr_text;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& name, const std::string& text) {
  std::ofstream out(std::filesystem::path(kDir) / name);
  out << text;
}

RunResult run(const std::string& args) {
  auto out = std::filesystem::path(kDir) / "out.json";
  auto err = std::filesystem::path(kDir) / "err.txt";
  std::string cmd = "\"" + g_binary + "\" " + args + " > " + out.string() +
                    " 2> " + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.stderr_text = slurp(err);
  std::string text = slurp(out);
  if (!text.empty()) r.report = nlohmann::json::parse(text, nullptr, false);
  return r;
}

}  // namespace

TEST_CASE("hilbert-samuel on the cusp") {
  write_file("m.json", R"({"ambient":["x","y"],"generators":["x","y"]})");
  write_file("cusp.json",
             R"({"ambient":["x","y"],"generators":["y^2 - x^3"]})");
  auto r = run("hs --ideal cli_scratch/m.json --quotient cli_scratch/cusp.json");
  REQUIRE(r.code == 0);
  CHECK(r.report["value"] == 2);
  CHECK(r.report["command"] == "hs");
  CHECK(r.report["certificate"]["dimension"] == 1);
  CHECK(r.report["certificate"]["backend"] == "general");
}

TEST_CASE("reports are deterministic modulo wall time") {
  write_file("ci.json", R"({"ambient":["x","y"],"generators":["x^2","y^3"]})");
  auto a = run("hs --ideal cli_scratch/ci.json");
  auto b = run("hs --ideal cli_scratch/ci.json");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  a.report.erase("wall_time_ms");
  b.report.erase("wall_time_ms");
  CHECK(a.report == b.report);
  CHECK(a.report["value"] == 6);
}

TEST_CASE("sample certificates replay by hand") {
  auto r = run("hs --ideal cli_scratch/ci.json");
  REQUIRE(r.code == 0);
  auto cert = r.report["certificate"];
  std::vector<int> base = cert["base"];
  std::map<int, long long> colengths;
  for (const auto& s : cert["samples"])
    colengths[s["t"][0].get<int>()] = s["colength"].get<long long>();
  // second difference at the accepted base
  int t = base[0];
  long long dd = colengths[t + 2] - 2 * colengths[t + 1] + colengths[t];
  CHECK(dd == r.report["value"].get<long long>());
}

TEST_CASE("mixed and polarization") {
  auto r = run(
      "mixed --ideals cli_scratch/m.json,cli_scratch/ci.json --degrees 1,1");
  REQUIRE(r.code == 0);
  CHECK(r.report["value"] == 2);

  auto p = run(
      "polarization --ideals cli_scratch/m.json,cli_scratch/ci.json "
      "--powers 1,1");
  REQUIRE(p.code == 0);
  CHECK(p.report["equal"] == true);
  CHECK(p.report["lhs"] == 11);
  CHECK(p.report["rhs"] == 11);
}

TEST_CASE("rees-sharp chain") {
  auto r = run(
      "rees-sharp --ideals cli_scratch/m.json,cli_scratch/ci.json --n 2");
  REQUIRE(r.code == 0);
  CHECK(r.report["pass"] == true);
  CHECK(r.report["chain"] == nlohmann::json::array({6, 2, 1}));
}

TEST_CASE("newton polygon and staircase") {
  write_file("mono.json",
             R"({"dimension":2,"generators":[[3,0],[2,1],[1,3],[0,4]]})");
  auto n = run("newton2d --ideal cli_scratch/mono.json");
  REQUIRE(n.code == 0);
  CHECK(n.report["value"] == 11);
  CHECK(n.report["certificate"]["hull"] ==
        nlohmann::json::array({{0, 4}, {2, 1}, {3, 0}}));

  auto s = run("staircase --ideal cli_scratch/mono.json");
  REQUIRE(s.code == 0);
  CHECK(s.report["value"] == 8);
}

TEST_CASE("curve subcommands") {
  write_file("cuspgerm.json",
             R"({"ambient":["x","y"],"truncation":24,"branches":[["t^2","t^3"]]})");
  auto l = run(
      "curve-lelong --germ cli_scratch/cuspgerm.json "
      "--weights cli_scratch/m.json");
  REQUIRE(l.code == 0);
  CHECK(l.report["value"] == 2);
  CHECK(l.report["certificate"]["branch_orders"] ==
        nlohmann::json::array({2}));

  auto v = run(
      "verify-curve --germ cli_scratch/cuspgerm.json "
      "--quotient cli_scratch/cusp.json --ideal cli_scratch/m.json");
  REQUIRE(v.code == 0);
  CHECK(v.report["equal"] == true);
  CHECK(v.report["lelong"] == 2);
  CHECK(v.report["hs"] == 2);
}

TEST_CASE("blowdown and semigroup") {
  write_file("canonical_g3.json", R"({"k0":1,"degree":4,"base_points":[]})");
  auto b = run("blowdown --datum cli_scratch/canonical_g3.json");
  REQUIRE(b.code == 0);
  CHECK(b.report["value"] == 4);

  auto s = run("semigroup --gaps 1,2,3");
  REQUIRE(s.code == 0);
  CHECK(s.report["first_nongap"] == 4);
  CHECK(s.report["value"] == 4);
  CHECK(s.report["certificate"]["d_seq"] ==
        nlohmann::json::array({1, 2, 3, 0}));

  auto none = run("semigroup");
  REQUIRE(none.code == 0);
  CHECK(none.report["value"] == 1);
}

TEST_CASE("bounds and volume control") {
  auto b = run("bounds --k0 1 --k1 1 --p 1 --n 1 --vol 4 --volB 0");
  REQUIRE(b.code == 0);
  CHECK(b.report["lower"] == 4);
  CHECK(b.report["upper"] == 4);

  auto v = run("vol-control --k0 1 --k1 4 --p 1 --n 1 --vol 1 --volB 3");
  REQUIRE(v.code == 0);
  CHECK(v.report["pass"] == true);
  CHECK(v.report["slack"] == 0);

  auto frac = run("bounds --k0 1 --k1 2 --p 1 --n 2 --vol 1/2 --volB 0");
  REQUIRE(frac.code == 0);
  CHECK(frac.report["lower"] == "1/2");
  CHECK(frac.report["upper"] == 1);
}

TEST_CASE("segre integral") {
  write_file("k_g3.json", R"({"rank":1,"truncation":1,"chern":["c1"]})");
  write_file("k_g3_table.json", R"({"c1":4})");
  auto r = run(
      "segre --chern cli_scratch/k_g3.json --table cli_scratch/k_g3_table.json");
  REQUIRE(r.code == 0);
  CHECK(r.report["value"] == 4);
}

TEST_CASE("input errors exit with code two") {
  write_file("bad_syntax.json",
             R"({"ambient":["x","y"],"generators":["x^2 +"]})");
  auto r = run("hs --ideal cli_scratch/bad_syntax.json");
  CHECK(r.code == 2);
  CHECK(r.stderr_text.find("input error") != std::string::npos);

  write_file("off_origin.json",
             R"({"ambient":["x","y"],"generators":["x - 1","y"]})");
  CHECK(run("hs --ideal cli_scratch/off_origin.json").code == 2);

  CHECK(run("hs --ideal cli_scratch/no_such_file.json").code == 2);
  CHECK(run("semigroup --gaps 2").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("budget exhaustion exits with code three") {
  // the only weight vanishes on the branch identically
  write_file("cuspweight.json",
             R"({"ambient":["x","y"],"generators":["y^2 - x^3"]})");
  auto r = run(
      "curve-lelong --germ cli_scratch/cuspgerm.json "
      "--weights cli_scratch/cuspweight.json");
  CHECK(r.code == 3);
  CHECK(r.stderr_text.find("truncation insufficient") != std::string::npos);

  auto hs = run(
      "hs --ideal cli_scratch/m.json --quotient cli_scratch/cusp.json "
      "--budget 1");
  CHECK(hs.code == 3);
}

TEST_CASE("pretty printing keeps the same content") {
  auto plain = run("hs --ideal cli_scratch/ci.json");
  auto pretty = run("--pretty hs --ideal cli_scratch/ci.json");
  REQUIRE(plain.code == 0);
  REQUIRE(pretty.code == 0);
  plain.report.erase("wall_time_ms");
  pretty.report.erase("wall_time_ms");
  CHECK(plain.report == pretty.report);
}

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[argc - 1];
  std::filesystem::create_directories(kDir);
  doctest::Context ctx;
  ctx.applyCommandLine(argc - (argc > 1 ? 1 : 0), argv);
  return ctx.run();
}
