#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kanenobu/cli/app.hpp"
#include "kanenobu/cli/cache.hpp"
#include "kanenobu/cli/report.hpp"
#include "kanenobu/cli/verify.hpp"
#include "kanenobu/diagram/pd_io.hpp"

using namespace kanenobu;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_binary(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(KN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kanenobu");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(fs::path(KN_GOLDEN) / name); }
std::string fixture(const std::string& name) { return std::string(KN_FIXTURES) + "/" + name; }

fs::path temp_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("kn_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int crossing_lines(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind("X ", 0) == 0;
  return n;
}

}  // namespace

TEST_CASE("gen writes the generated diagram") {
  const fs::path dir = temp_dir("gen");
  for (auto [p, q, n] : std::vector<std::tuple<int, int, int>>{{1, -1, 10}, {0, 0, 8}, {-3, 2, 13}}) {
    const fs::path file = dir / "k.pd";
    REQUIRE(run({"gen", std::to_string(p), std::to_string(q), "-o", file.string()}).code == 0);
    const std::string text = slurp(file);
    CHECK(text.rfind("pdcode v1\n", 0) == 0);
    CHECK(crossing_lines(text) == n);
    CHECK_FALSE(validate(parse_pd(text)));
  }
  const Run to_stdout = run({"gen", "2", "1"});
  CHECK(to_stdout.code == 0);
  CHECK(crossing_lines(to_stdout.out) == 11);
  fs::remove_all(dir);
}

TEST_CASE("golden reports") {
  const Run k00 = run({"invariants", "--kanenobu", "0", "0", "--format", "json", "--no-cache"});
  CHECK(k00.code == 0);
  CHECK(k00.out == golden("k00.json"));
  const Run f8 = run({"invariants", "--pd", fixture("4_1.pd"), "--format", "json", "--no-cache"});
  CHECK(f8.code == 0);
  CHECK(f8.out == golden("4_1.json"));
  const Run table = run({"invariants", "--kanenobu", "0", "0", "--format", "table", "--no-cache"});
  CHECK(table.out == golden("k00.txt"));
  CHECK(table.out.find("khovanov (total 26)") != std::string::npos);
}

TEST_CASE("golden files carry the expected values") {
  const auto k00 = nlohmann::json::parse(golden("k00.json"));
  CHECK(dims_from_json(k00["khovanov"]).total() == 26);
  CHECK(k00["crossing_number"]["exact"] == 8);
  CHECK(k00["lee_degrees"] == nlohmann::json::array({0, 0}));
  for (const auto& [name, ok] : k00["checks"].items()) CHECK_MESSAGE(ok.get<bool>(), name);
  const auto f8 = nlohmann::json::parse(golden("4_1.json"));
  CHECK(f8["breadth"] == 4);
  CHECK(poly_from_json(f8["jones"], Var::t, true) ==
        LaurentPoly1::from_coefficients(Var::t, -2, {1, -1, 1, -1, 1}));
  CHECK(poly_from_json(f8["q_poly"], Var::x, false) == LaurentPoly1::from_coefficients(Var::x, 0, {-3, -2, 4, 2}));
  CHECK(dims_from_json(f8["khovanov"]).total() == 6);
  CHECK_FALSE(f8.contains("wall_time"));
}

TEST_CASE("report json round trip") {
  const auto j = nlohmann::json::parse(golden("k00.json"));
  const InvariantReport r = report_from_json(j);
  CHECK(to_json(r) == j);
  CHECK(r.khovanov->total() == 26);
  CHECK(r.crossing_number->is_exact());

  InvariantReport b;
  b.input = "kanenobu 3 -2";
  b.crossing_number = CrossingNumberResult::make_bounds(12, 13, 13, "bounds");
  b.breadth = Rational(1, 2);
  b.wall_time = 0.25;
  b.notes = {"a note"};
  const InvariantReport back = report_from_json(to_json(b));
  CHECK(to_json(back) == to_json(b));
  CHECK(back.crossing_number == b.crossing_number);
  CHECK(back.breadth == Rational(1, 2));
}

TEST_CASE("invariant subcommands") {
  const Run f8 = run({"invariants", "--pd", fixture("4_1.pd"), "--no-cache"});
  CHECK(f8.code == 0);
  CHECK(f8.out.find("breadth: 4\n") != std::string::npos);
  CHECK(run({"jones", "--pd", fixture("hopf.pd")}).out == "-t^(5/2) - t^(1/2)\n");
  CHECK(run({"qpoly", "--pd", fixture("4_1.pd")}).out == "2x^3 + 4x^2 - 2x - 3\n");
  const Run kh = run({"khovanov", "--pd", fixture("4_1.pd"), "--format", "json"});
  CHECK(dims_from_json(nlohmann::json::parse(kh.out)["khovanov"]).total() == 6);
  const Run cn = run({"crossing", "--kanenobu", "2", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(cn.out)["exact"] == 13);
  const Run bounds = run({"crossing", "--kanenobu", "3", "-2", "--format", "json"});
  const auto bj = nlohmann::json::parse(bounds.out);
  CHECK(bj["lo"] == 12);
  CHECK(bj["hi"] == 13);
  CHECK(bj["conjectured"] == 13);
}

TEST_CASE("crossing number in a full report") {
  const Run r = run({"invariants", "--kanenobu", "2", "3", "--format", "json", "--no-cache"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["crossing_number"]["exact"] == 13);
  // 13 crossings is over the default Kauffman cap
  CHECK(j["q_poly"].is_null());
  CHECK(j["notes"][0].get<std::string>().find("Kauffman cap 12") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path dir = temp_dir("exit");
  std::ofstream(dir / "bad.pd") << "pdcode v1\nX 1 2 3 4 +\n";
  std::ofstream(dir / "garbled.pd") << "pdcode v1\nX 1 2 +\n";
  CHECK(run_binary("invariants --pd " + (dir / "bad.pd").string()).code == 1);
  CHECK(run_binary("jones --pd " + (dir / "garbled.pd").string()).code == 1);
  CHECK(run_binary("jones --pd " + (dir / "missing.pd").string()).code == 1);
  CHECK(run_binary("jones --kanenobu 3 3 --max-crossings 10").code == 2);
  CHECK(run_binary("khovanov --kanenobu 4 4").code == 2);
  CHECK(run_binary("qpoly --kanenobu 3 2").code == 2);
  CHECK(run_binary("jones --kanenobu 1 1").code == 0);
  fs::remove_all(dir);
}

TEST_CASE("cache gives byte-identical reports") {
  const fs::path dir = temp_dir("cache");
  const std::string env = "KANENOBU_CACHE=" + dir.string();
  const std::string args = "invariants --kanenobu 1 -1 --format json";
  const Run first = run_binary(args, env);
  CHECK(first.code == 0);
  CHECK_FALSE(fs::is_empty(dir));
  const Run second = run_binary(args, env);
  CHECK(second.out == first.out);
  CHECK(run_binary(args + " --no-cache", env).out == first.out);
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".tmp");
  fs::remove_all(dir);
}

TEST_CASE("result cache") {
  const fs::path dir = temp_dir("store");
  const ResultCache c(dir);
  CHECK(c.enabled());
  CHECK_FALSE(c.get("enc", "jones"));
  c.put("enc", "jones", nlohmann::json::array({1, 2}));
  CHECK(c.get("enc", "jones") == nlohmann::json::array({1, 2}));
  CHECK_FALSE(c.get("enc", "q_poly"));
  CHECK_FALSE(c.get("other", "jones"));
  CHECK_FALSE(ResultCache().enabled());
  CHECK_FALSE(ResultCache::from_env(true).enabled());
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--suite", "jones", "--max", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "khovanov", "--sum-max", "3"}).code == 0);
  const Run quick = run({"verify", "--suite", "all", "--max", "0"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("FAIL") == std::string::npos);
  CHECK(quick.out.find("PASS jones K(0,0)") != std::string::npos);
}
