#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CIRCLAB_BINARY) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze") {
  const auto k9 = run("analyze 9 1,2,3,4,5,6,7,8");
  CHECK(k9.status == 0);
  CHECK(k9.out.find("normal_arc_transitive        no") != std::string::npos);

  const auto c6 = run("analyze 6 1,5 --json");
  REQUIRE(c6.status == 0);
  const auto j = nlohmann::json::parse(c6.out);
  CHECK(j.at("arc_transitive") == true);
  CHECK(j.at("c_normal_oracle") == true);
  CHECK(j.at("aut_order") == 12);

  CHECK(run("analyze 6 0,1").status == 2);
  CHECK(run("analyze 6").status == 2);
  CHECK(run("analyze x 1").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("decompose") {
  const auto r = run("decompose 15 1,2,4,7,8,11,13,14 --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("b") == 1);
  CHECK(j.at("complete_factor_orders") == std::vector<int>{5});
  CHECK(run("decompose 6 1,2").status == 2);
  CHECK(run("decompose 6 2,4").status == 2);
}

TEST_CASE("verify") {
  const auto r = run("verify --max-n 8 --json --strict");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdicts").at("T1.1") == "vindicated");
  for (const auto& t : j.at("tallies")) {
    if (t.at("name") == "T1.1") CHECK(t.at("counterexamples").empty());
  }

  const auto at = run("verify --max-n 15 --arc-transitive-only");
  CHECK(at.status == 0);
  CHECK(at.out.find("(15, {1,2,4,7,8,11,13,14})") != std::string::npos);

  CHECK(run("verify --max-n 40").status == 2);
  CHECK(run("verify").status == 2);
}

TEST_CASE("enumerate") {
  const auto r = run("enumerate 5 --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("sets").size() == 5);
  const auto at = run("enumerate 6 --arc-transitive-only");
  CHECK(at.status == 0);
  CHECK(at.out == "{1}\n{1,2,3,4,5}\n{1,2,4,5}\n{1,3,5}\n{1,4}\n{1,5}\n");
}

TEST_CASE("export") {
  const auto edges = run("export 3 1 --edges");
  CHECK(edges.status == 0);
  CHECK(edges.out == "0 1\n1 2\n2 0\n");

  const auto dot = run("export 4 1,3 --dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("graph \"Circ(4,{1,3})\" {", 0) == 0);
  CHECK(dot.out.find("  0 -- 3;") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "circlab_cli_test.dot";
  std::filesystem::remove(path);
  CHECK(run("export 5 1,4 --dot --out " + path.string()).status == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("graph", 0) == 0);
  std::filesystem::remove(path);

  CHECK(run("export 5 1,4 --dot --out /nonexistent-dir/g.dot").status == 3);
  CHECK(run("export 5 1,4").status == 2);
  CHECK(run("export 5 1,4 --dot --edges").status == 2);
}
