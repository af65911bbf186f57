#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace lesac;

namespace {

RunConfig config(const std::string& kb, Command cmd, OutputFormat out = OutputFormat::Text) {
  RunConfig cfg;
  cfg.kb_path = testing::fixture(kb);
  cfg.command = cmd;
  cfg.output = out;
  return cfg;
}

std::string temp_kb(const std::string& text) {
  const std::string path = "lesac_cli_test.lsc";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("validate") {
  const auto res = run(config("ex3.lsc", Command::Validate));
  CHECK(res.exit_code == 0);
  CHECK(res.out == "well-defined\n");
  CHECK(res.err.empty());

  RunConfig bad = config("ex3.lsc", Command::Validate, OutputFormat::Json);
  bad.kb_path = temp_kb("fact p. fact ~p.");
  const auto r2 = run(bad);
  CHECK(r2.exit_code == 1);
  CHECK(nlohmann::json::parse(r2.out)["well_defined"] == false);
  CHECK(r2.err.find("AXIOM-INCONSISTENT") != std::string::npos);
  std::remove(bad.kb_path.c_str());
}

TEST_CASE("explain as json") {
  RunConfig cfg = config("ex3.lsc", Command::Explain, OutputFormat::Json);
  cfg.target = "O(Sober(Roger))";
  const auto res = run(cfg);
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  std::set<std::string> ids;
  for (const auto& n : j["norms"]) ids.insert(n["id"].get<std::string>());
  CHECK(ids == std::set<std::string>{"n4", "n5"});
  REQUIRE(j["principles"].size() == 1);
  CHECK(j["principles"][0]["id"] == "p5");
  CHECK(j["target"] == "O(Sober(Roger))");
  CHECK(j["ordering"].empty());
}

TEST_CASE("explain failures") {
  RunConfig cfg = config("ex3.lsc", Command::Explain);
  cfg.target = "O(Fly(Roger))";
  auto res = run(cfg);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("NotAccepted") != std::string::npos);
  CHECK(res.out.empty());

  cfg.target = "O(Fly(";
  CHECK(run(cfg).exit_code == 2);

  cfg.target = "O(Sober(Roger))";
  cfg.extension_index = 99;
  CHECK(run(cfg).exit_code == 2);
}

TEST_CASE("parse errors exit with 3") {
  RunConfig cfg = config("ex3.lsc", Command::Conclusions);
  cfg.kb_path = temp_kb("fact p\n");
  const auto res = run(cfg);
  CHECK(res.exit_code == 3);
  CHECK(res.err.find("SyntaxError") != std::string::npos);
  cfg.kb_path = "does/not/exist.lsc";
  CHECK(run(cfg).exit_code == 3);
  std::remove("lesac_cli_test.lsc");
}

TEST_CASE("conclusions json is deterministic") {
  RunConfig cfg = config("ex5.lsc", Command::Conclusions, OutputFormat::Json);
  cfg.semantics = SemanticsKind::Complete;
  const auto a = run(cfg), b = run(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["semantics"] == "complete");
  CHECK(j["stance"] == "skeptical");
  CHECK_FALSE(j["extensions"].empty());
}

TEST_CASE("graph and check") {
  auto res = run(config("ex3.lsc", Command::Graph, OutputFormat::Dot));
  CHECK(res.exit_code == 0);
  CHECK(res.out.rfind("digraph", 0) == 0);
  res = run(config("ex3.lsc", Command::Graph, OutputFormat::Json));
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["arguments"].size() > 0);
  res = run(config("ex5.lsc", Command::Check));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("argument ordering is reasonable") != std::string::npos);
}
