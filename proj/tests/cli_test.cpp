#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// capture stdout; stderr_mode: 0 drop, 1 merge into out, 2 only stderr
RunResult run_cli(const std::string& args, int stderr_mode = 0) {
  std::string cmd = std::string(DOMINO_CLI_PATH) + " " + args;
  switch (stderr_mode) {
    case 0: cmd += " 2>/dev/null"; break;
    case 1: cmd += " 2>&1"; break;
    case 2: cmd += " 2>&1 1>/dev/null"; break;
  }
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  const RunResult r = run_cli(args + " --format json");
  CHECK(r.code == expect_code);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("count 2 5") {
  const auto env = run_json("count 2 5");
  CHECK(env.at("command") == "count");
  CHECK(env.at("status") == "ok");
  CHECK(env.at("parameters").at("m") == "2");
  CHECK(env.at("result").at("value") == "8");

  const RunResult text = run_cli("count 2 5");
  CHECK(text.code == 0);
  CHECK(text.out == "T(2,5) = 8\n");
}

TEST_CASE("count handles extrapolated n") {
  CHECK(run_json("count 2 -5").at("result").at("value") == "-3");
  CHECK(run_json("count 2 0").at("result").at("value") == "1");
}

TEST_CASE("table 2 --from -7 --to 7 reproduces the two-sided display") {
  const auto env = run_json("table 2 --from -7 --to 7");
  const auto& rows = env.at("result").at("values");
  REQUIRE(rows.size() == 15);
  const char* expect[] = {"-8", "5", "-3", "2", "-1", "1", "0", "1",
                          "1",  "2", "3",  "5", "8",  "13", "21"};
  for (size_t i = 0; i < 15; ++i) {
    CHECK(rows[i].at("n") == std::to_string(static_cast<long>(i) - 7));
    CHECK(rows[i].at("value") == expect[i]);
  }

  const RunResult csv = run_cli("table 2 --from -7 --to 7 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.starts_with("n,value\n-7,-8\n-6,5\n"));
}

TEST_CASE("oracle subcommand with graph dump") {
  const auto env = run_json("oracle 2 -5 --dump-graph");
  CHECK(env.at("result").at("signed_count") == "-3");
  CHECK(env.at("result").at("positive") == "0");
  CHECK(env.at("result").at("negative") == "3");
  const auto& graph = env.at("result").at("graph");
  CHECK(graph.at("vertices") == "14");
  CHECK(graph.at("edges").size() == 17);
}

TEST_CASE("oracle guard yields exit 2, force overrides") {
  const RunResult guarded = run_cli("oracle 4 11", 2);
  CHECK(guarded.code == 2);
  CHECK(guarded.out.find("guard") != std::string::npos);
  const auto forced = run_json("oracle 3 6 --force");
  CHECK(forced.at("result").at("signed_count") == "41");
}

TEST_CASE("recurrence 2") {
  const auto env = run_json("recurrence 2");
  const auto& result = env.at("result");
  CHECK(result.at("degree") == "2");
  CHECK(result.at("coefficients") == nlohmann::json({"-1", "-1", "1"}));
  CHECK(result.at("char_poly") == nlohmann::json({"1", "1", "-2", "-1", "1"}));
  CHECK(result.at("divides_char_poly") == true);
}

TEST_CASE("genfun 3") {
  const auto env = run_json("genfun 3");
  CHECK(env.at("result").at("P") == nlohmann::json({"1", "0", "-1"}));
  CHECK(env.at("result").at("Q") == nlohmann::json({"1", "0", "-4", "0", "1"}));
  CHECK(env.at("result").at("degree_gap") == "2");
  CHECK(!env.at("result").at("symmetry").empty());
}

TEST_CASE("verify exits 0 and reports rows") {
  const auto env = run_json("verify 6 --nmax 8");
  CHECK(env.at("status") == "ok");
  CHECK(env.at("result").at("all_pass") == true);
  CHECK(env.at("result").at("rows").size() == 9);

  const RunResult text = run_cli("verify 2 --nmax 4 --oracle");
  CHECK(text.code == 0);
  CHECK(text.out.find("all rows pass") != std::string::npos);
}

TEST_CASE("count3d and verify3d") {
  CHECK(run_json("count3d 2 2 2").at("result").at("value") == "9");
  const auto env = run_json("verify3d 2 2 --nmax 4");
  CHECK(env.at("result").at("all_pass") == true);
  CHECK(env.at("result").at("rows").size() == 5);
}

TEST_CASE("laurent --down-to -4") {
  const auto env = run_json("laurent --down-to -4");
  CHECK(env.at("status") == "ok");
  const auto& rows = env.at("result").at("rows");
  REQUIRE(rows.size() == 8);  // -4..3
  for (const auto& row : rows) {
    CHECK(row.at("all_pm1") == true);
    CHECK(row.at("matches_table") == true);
  }
  // the first row is n = -4: two terms, both coefficient +1
  CHECK(rows[0].at("n") == "-4");
  CHECK(rows[0].at("term_count") == "2");
  CHECK(rows[0].at("terms")[0].at("coefficient") == "1");
}

TEST_CASE("unknown subcommand: exit 2 with usage on stderr") {
  const RunResult r = run_cli("frobnicate 1 2", 2);
  CHECK(r.code == 2);
  CHECK(r.out.find("Usage") != std::string::npos);
  const RunResult empty_out = run_cli("frobnicate 1 2", 0);
  CHECK(empty_out.out.empty());
}

TEST_CASE("invalid input: exit 2") {
  CHECK(run_cli("count 0 5", 0).code == 2);
  CHECK(run_cli("count 13 2", 0).code == 2);    // width cap
  CHECK(run_cli("laurent --down-to -9", 0).code == 2);
  CHECK(run_cli("count3d 5 4 1", 0).code == 2);  // cell cap
}

TEST_CASE("config file overrides caps") {
  const std::string path = "/tmp/domino_test_config.json";
  std::ofstream(path) << R"({"transfer_width_cap": 3, "laurent_depth_floor": -8})";
  CHECK(run_cli("count 4 2 --config " + path, 0).code == 2);
  CHECK(run_cli("laurent --down-to -8 --config " + path, 0).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("json output round-trips and is byte-identical across runs/threads") {
  const RunResult a = run_cli("count 6 20 --format json");
  const RunResult b = run_cli("count 6 20 --format json");
  const RunResult c = run_cli("count 6 20 --format json --threads 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const auto parsed = nlohmann::json::parse(a.out);
  CHECK(nlohmann::json::parse(parsed.dump()) == parsed);

  const RunResult v1 = run_cli("verify 5 --nmax 6 --format json");
  const RunResult v2 = run_cli("verify 5 --nmax 6 --format json --threads 3");
  CHECK(v1.out == v2.out);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help", 1).code == 0);
}
