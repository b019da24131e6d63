#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ludics/cli.hpp"
#include "ludics/text.hpp"
#include "oracle.hpp"

using namespace ludics;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = run_cli(args, out, err);
  return {s, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return oracle::fixtures_dir() + "/" + name; }

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// replays NAME.commands the way tests/update_fixtures.sh does
std::string replay(const std::string& name) {
  std::istringstream cmds(oracle::slurp(fixture(name + ".commands")));
  std::string all;
  for (std::string line; std::getline(cmds, line);) {
    auto w = words(line);
    if (w.empty()) continue;
    w[1] = fixture(w[1]);
    w.push_back("--out");
    w.push_back("structured");
    all += run(w).out;
  }
  return all;
}

const char* names[] = {"paths-d",     "paths-e",     "reversible",  "tensor",     "behaviour-c",
                       "behaviour-e", "behaviour-f", "behaviour-g", "behaviour-h"};

}  // namespace

TEST_CASE("fixture reports match the checked-in expectations") {
  for (const char* n : names) {
    INFO(n);
    CHECK(replay(n) == oracle::slurp(fixture(std::string(n) + ".expected")));
  }
}

TEST_CASE("structured output is deterministic") {
  for (const char* n : {"behaviour-g", "paths-d"}) CHECK(replay(n) == replay(n));
}

TEST_CASE("workspaces round-trip through the printer") {
  for (const char* n : names) {
    INFO(n);
    Workspace ws = oracle::load(n);
    std::string text = print_workspace(ws);
    CHECK(parse_workspace(text) == ws);
    CHECK(print_workspace(parse_workspace(text)) == text);
  }
}

TEST_CASE("an empty file is an empty workspace") {
  Workspace ws = parse_workspace("");
  CHECK(ws.designs.empty());
  CHECK(ws.paths.empty());
  CHECK(ws.behaviours.empty());
  CHECK(parse_workspace("// only a comment\n") == ws);
}

TEST_CASE("the paths-d design has its seven chronicles") {
  CHECK(oracle::load("paths-d").designs.at("D").chronicles.size() == 7);
}

TEST_CASE("exit codes") {
  auto r = run({"ortho", fixture("behaviour-e.ludics"), "E", "Eprime"});
  CHECK(r.status == 0);
  CHECK(r.out.find("trace: +xi{1,2} -xi.1{0} +xi.1.0{0} -xi.2{0} +xi.2.0{0}") != std::string::npos);
  r = run({"regular", fixture("behaviour-f.ludics"), "bF"});
  CHECK(r.status == 1);
  CHECK(r.out.find("chronicle") != std::string::npos);
  r = run({"decompose", fixture("behaviour-e.ludics"), "bE", "--mode", "exhaustive"});
  CHECK(r.status == 0);
  CHECK(r.out.find("tensor@xi(up@xi.1 down@xi.1.0 up@xi.1.0.0 top, up@xi.2 down@xi.2.0 up@xi.2.0.0 top)") !=
        std::string::npos);
  r = run({"check", fixture("paths-d.ludics"), "s"});
  CHECK(r.status == 1);
  CHECK(r.out.find("negative-jump") != std::string::npos);
  CHECK(run({"frobnicate", fixture("paths-d.ludics")}).status == 2);
  CHECK(run({"check", fixture("paths-d.ludics"), "nosuch"}).status == 2);
  CHECK(run({"check", fixture("nosuch.ludics"), "p"}).status == 2);
  CHECK(run({"check"}).status == 2);
  CHECK(run({"visitables", fixture("behaviour-g.ludics"), "bG", "--mode", "exhaustive", "--budget", "1"}).status ==
        3);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_workspace("path p base |- xi [ +xi{0} ]\npath q base |- xi [ +xi{0 ]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
    CHECK(std::string(e.what()).find("line 2, column") != std::string::npos);
  }
  auto tmp = std::filesystem::temp_directory_path() / "ludics-bad.ludics";
  {
    std::ofstream f(tmp);
    f << "design D base |- xi {\n  +xi{0} { -xi.0{} }\n}\n";
  }
  auto r = run({"print", tmp.string(), "--out", "structured"});
  CHECK(r.status == 2);
  CHECK(r.out.find("D") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("invalid items are rejected at parse time with their name") {
  try {
    parse_workspace("design Bad base |- xi { +xi{0} { -xi.0{} } }");
    FAIL("expected a validation error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("Bad") != std::string::npos);
  }
  CHECK_THROWS(parse_workspace("path p base xi |- [ ]\npath p base xi |- [ ]"));
  CHECK_THROWS(parse_workspace("behaviour b = closure { Missing }"));
}

TEST_CASE("structured reports echo the command") {
  auto r = run({"view", fixture("paths-d.ludics"), "p", "--out", "structured"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "view");
  CHECK(j["file"] == "paths-d.ludics");
  CHECK(j["args"] == nlohmann::json::array({"p"}));
  CHECK(j["status"] == 0);
  CHECK(parse_seq(j["view"].get<std::string>()) == parse_seq(oracle::worked::d));
  CHECK_FALSE(j.contains("timing"));
  auto t = nlohmann::json::parse(run({"view", fixture("paths-d.ludics"), "p", "--out", "structured", "--timing"}).out);
  CHECK(t.contains("timing"));
}
