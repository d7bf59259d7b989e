#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {
std::string g_binary;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}
}  // namespace

TEST_CASE("passing runs exit 0 with a well-formed report") {
  RunResult r = run("sm check --seed 11 --samples 60");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "string2g-report/1");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["command"] == "sm check");
  CHECK(j["pass"] == true);
  CHECK(j["config"]["seed"] == 11);
  bool found = false;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["max"].get<double>() < 1e-9);
    if (c["name"] == "total_differential_squared") found = true;
  }
  CHECK(found);
}

TEST_CASE("repeated runs with the same seed are byte-identical") {
  RunResult a = run("sm check --seed 11 --samples 50");
  RunResult b = run("sm check --seed 11 --samples 50");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  RunResult c = run("twogroup check --seed 7 --samples 80");
  RunResult d = run("twogroup check --seed 7 --samples 80");
  CHECK(c.out == d.out);
}

TEST_CASE("json reports never carry wall-clock fields, text reports do") {
  RunResult j = run("linfty check --seed 3");
  CHECK(j.out.find("wall") == std::string::npos);
  RunResult t = run("linfty check --seed 3 --format text");
  CHECK(t.status == 0);
  CHECK(t.out.find("wall") != std::string::npos);
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("a failing verification exits 1") {
  RunResult r = run("sds verify --solution 1 --literal --samples 32 --h 2e-3 --seed 5");
  CHECK(r.status == 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["detail"]["reading"] == "literal");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("sm").status == 2);
  CHECK(run("sm check --no-such-flag").status == 2);
  CHECK(run("sds verify --solution 7").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("both string solutions verify at second order") {
  for (int sol : {1, 2}) {
    RunResult r = run("sds verify --solution " + std::to_string(sol) +
                      " --samples 48 --h 2e-3 --seed 2");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"][0]["detail"]["order"].get<double>() >= 1.9);
    CHECK(j["checks"][1]["detail"]["slope"].get<double>() >= 1.9);
  }
}

TEST_CASE("config files feed defaults and flags still win") {
  std::string path = "/tmp/string2g_test_config.ini";
  {
    std::ofstream f(path);
    f << "seed=21\nsamples=40\n";
  }
  RunResult a = run("sm check --config " + path);
  nlohmann::json ja = nlohmann::json::parse(a.out);
  CHECK(ja["config"]["seed"] == 21);
  CHECK(ja["config"]["samples"] == 40);
  RunResult b = run("sm check --config " + path + " --seed 22");
  nlohmann::json jb = nlohmann::json::parse(b.out);
  CHECK(jb["config"]["seed"] == 22);
  std::remove(path.c_str());
}

TEST_CASE("subcommand validator selection restricts the check list") {
  RunResult r = run("cocycle validate --system ordinary --samples 24 --seed 3");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "ordinary");
  CHECK(j["checks"][0]["detail"]["perturbed_fails"] == true);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-binary> [doctest args]\n");
    return 2;
  }
  g_binary = argv[1];
  doctest::Context ctx(argc - 1, argv + 1);
  return ctx.run();
}
