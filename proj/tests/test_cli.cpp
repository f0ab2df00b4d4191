#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cplanar/io.hpp"
#include "support.hpp"

using namespace cplanar;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CPLANAR_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "cplanar_cli_tests";
  fs::create_directories(d);
  return d;
}

std::string put(const std::string& name, const json& j) {
  const fs::path p = scratch() / name;
  write_json(p.string(), j);
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
  CHECK(run("validate " + put("t3.json", instance_to_json(fixtures::t3()))).code == 0);
  json missing = instance_to_json(fixtures::t3());
  missing["rotations"][1] = json::array({2});
  const Run bad = run("validate " + put("missing.json", missing));
  CHECK(bad.code == 3);
  CHECK(bad.out.find("MalformedRotation") != std::string::npos);
  const Run two = run("validate " + put("two.json", instance_to_json(fixtures::cycle({0, 1, 0, 1}, 2))));
  CHECK(two.code == 2);
  CHECK(two.out.find("Unsupported") != std::string::npos);
  CHECK(run("validate " + (scratch() / "absent.json").string()).code == 3);
}

TEST_CASE("test and verify") {
  const std::string cert = (scratch() / "t3.cert.json").string();
  CHECK(run("test " + put("t3.json", instance_to_json(fixtures::t3())) + " --certificate " + cert).code == 0);
  CHECK(run("verify " + cert).code == 0);
  CHECK(run("test " + put("dh.json", instance_to_json(fixtures::double_hexagon()))).code == 1);
  const Run zh = run("test " + put("zh.json", instance_to_json(fixtures::zero_hexagon())));
  CHECK(zh.code == 2);
  CHECK(zh.out.find("all_zero_winding") != std::string::npos);
}

TEST_CASE("oracle") {
  CHECK(run("oracle " + put("t3.json", instance_to_json(fixtures::t3()))).code == 0);
  CHECK(run("oracle " + put("dh.json", instance_to_json(fixtures::double_hexagon()))).code == 0);
  CHECK(run("oracle " + put("dh.json", instance_to_json(fixtures::double_hexagon())) + " --limits 4").code == 2);
}

TEST_CASE("render") {
  const std::string cert = (scratch() / "t3.cert.json").string();
  REQUIRE(run("test " + put("t3.json", instance_to_json(fixtures::t3())) + " --certificate " + cert).code == 0);
  const fs::path svg = scratch() / "t3.svg";
  CHECK(run("render " + cert + " -o " + svg.string()).code == 0);
  CHECK(slurp(svg) == slurp(fs::path(CPLANAR_TEST_DATA) / "t3.svg"));

  const std::string rej = (scratch() / "dh.cert.json").string();
  run("test " + put("dh.json", instance_to_json(fixtures::double_hexagon())) + " --certificate " + rej);
  const Run r = run("render " + rej);
  CHECK(r.code == 3);
  CHECK(r.out.find("no certificate") != std::string::npos);
}

TEST_CASE("gen is byte-identical per seed") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  CHECK(run("gen --n 200 --c 4 --seed 9 -o " + a.string()).code == 0);
  CHECK(run("gen --n 200 --c 4 --seed 9 -o " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("validate " + a.string()).code == 0);
}

}  // TEST_SUITE
