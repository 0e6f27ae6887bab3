#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using json = nlohmann::ordered_json;
namespace cli = frobsplit::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected = cli::kExitOk) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expected) << r.out << r.err;
  return json::parse(r.out);
}

json rational(const char* num, const char* den) { return {{"num", num}, {"den", den}}; }

// Reads "field,value" rows, honoring quoted cells.
std::vector<std::pair<std::string, std::string>> parse_csv(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      cells.push_back(cell);
      cell.clear();
      if (cells.size() == 2) rows.emplace_back(cells[0], cells[1]);
      cells.clear();
    } else {
      cell += c;
    }
  }
  return rows;
}

const json* lookup(const json& j, const std::string& path) {
  const json* cur = &j;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (cur->is_array()) {
      const std::size_t i = std::stoul(part);
      if (i >= cur->size()) return nullptr;
      cur = &(*cur)[i];
    } else if (cur->is_object() && cur->contains(part)) {
      cur = &(*cur)[part];
    } else {
      return nullptr;
    }
  }
  return cur;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("frobsplit_test_" + name);
}

}  // namespace

TEST(Cli, HelpListsEverySubcommand) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  for (const char* s : {"torus", "density", "cm-fraction", "simulate", "goursat", "weil", "nonspecial"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
}

TEST(Cli, UsageErrorsNameTheFlag) {
  const CliRun a = run({"torus", "--family", "Q", "--ell", "3"});
  EXPECT_EQ(a.code, cli::kExitUsage);
  EXPECT_NE(a.err.find("--family"), std::string::npos);
  const CliRun b = run({"torus", "--family", "C", "--ell", "3", "--bogus", "1"});
  EXPECT_EQ(b.code, cli::kExitUsage);
  EXPECT_NE(b.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  const CliRun c = run({"simulate", "--family", "C", "--ells", "3", "--samples", "10"});
  EXPECT_EQ(c.code, cli::kExitUsage);
  EXPECT_NE(c.err.find("--seed"), std::string::npos);
}

TEST(Cli, TorusCensus) {
  const json j = run_json({"torus", "--family", "C", "--r", "1", "--ell", "3", "--m", "1", "--check"});
  EXPECT_EQ(j["schema"], cli::kSchema);
  EXPECT_EQ(j["status"], "ok");
  const json& c = j["result"]["census"];
  EXPECT_EQ(c["torus_order"], "8");
  EXPECT_EQ(c["regular_count"], "6");
  EXPECT_EQ(c["normalizer_order"], "16");
  EXPECT_EQ(c["weyl_order"], "2");
  EXPECT_EQ(j["result"]["exhaustive"]["j_count"], "18");
  EXPECT_EQ(j["result"]["exhaustive"]["count_identity_holds"], true);
}

TEST(Cli, DensityExample) {
  const json j = run_json({"density", "--family", "C", "--r", "1", "--ells", "3,5", "--m", "1", "--squeeze", "full"});
  EXPECT_EQ(j["result"]["product"], rational("35", "96"));
  EXPECT_EQ(j["result"]["per_prime"][0]["fraction"], rational("5", "8"));
}

TEST(Cli, CmFractionExample) {
  const json j = run_json({"cm-fraction", "--degree", "4", "--ell", "3"});
  EXPECT_EQ(j["result"]["per_prime"][0]["fraction"], rational("1", "10"));
  const json k = run_json({"cm-fraction", "--degree", "4", "--ells", "2,3", "--check"});
  EXPECT_EQ(k["result"]["product"], rational("1", "50"));
  EXPECT_EQ(k["result"]["per_prime"][0]["exhaustive"], rational("1", "5"));
}

TEST(Cli, WeilRejectionExitsFour) {
  const json j = run_json({"weil", "--q", "3", "--poly", "3,-5,1"}, cli::kExitDomain);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["error"]["code"], "RootBoundViolation");
  EXPECT_EQ(j["result"]["validation"]["accepted"], false);
  EXPECT_EQ(j["exit_code"], cli::kExitDomain);
}

TEST(Cli, WeilAnalyze) {
  const json j = run_json({"weil", "--q", "3", "--poly", "9,0,6,0,1"});
  EXPECT_EQ(j["result"]["d"], 2);
  EXPECT_EQ(j["result"]["root"], "3,0,1");
  EXPECT_EQ(j["result"]["decomposition"], "X ~ Y^2");
}

TEST(Cli, NonSpecial) {
  const json j = run_json({"nonspecial", "--r", "6", "--sig", "1:5"});
  EXPECT_EQ(j["result"]["conditions"], json::array({"ii"}));
  const json k = run_json({"nonspecial", "--r", "6", "--sig", "3:3"});
  EXPECT_EQ(k["result"]["certified"], false);
  run_json({"nonspecial", "--r", "6", "--sig", "1:4"}, cli::kExitDomain);
}

TEST(Cli, BudgetExceededExitsThree) {
  const json j = run_json({"goursat", "--family", "C", "--r", "2", "--ells", "5,7", "--seed", "1"}, cli::kExitBudget);
  EXPECT_EQ(j["error"]["code"], "BudgetExceeded");
}

TEST(Cli, GoursatVerdicts) {
  const json a = run_json({"goursat", "--family", "C", "--ells", "5,7", "--seed", "3"});
  EXPECT_EQ(a["result"]["verdict"], "full");
  const json b = run_json({"goursat", "--family", "C", "--ells", "5,5", "--seed", "3", "--diagonal"});
  EXPECT_EQ(b["result"]["verdict"], "out-of-hypothesis");
}

TEST(Cli, SimulateIsReproducible) {
  const std::vector<std::string> args = {"simulate", "--family", "C", "--ells", "3,5", "--samples", "20000", "--seed", "9", "--streams", "3"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["result"]["seed"], "9");
  EXPECT_EQ(j["result"]["streams"], 3);
  EXPECT_EQ(j["result"]["expected"], rational("35", "96"));
}

TEST(Cli, CsvAgreesWithJson) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"density", "--family", "C", "--ells", "3,5,7"},
           {"weil", "--q", "3", "--poly", "3,-1,1"},
           {"torus", "--family", "A", "--r", "2", "--ell", "3"},
           {"cm-fraction", "--degree", "4", "--ells", "2,3"}}) {
    const json j = run_json(args);
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const CliRun c = run(csv_args);
    ASSERT_EQ(c.code, cli::kExitOk);
    const auto rows = parse_csv(c.out);
    ASSERT_GT(rows.size(), 5u);
    EXPECT_EQ(rows.front().first, "field");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& [path, value] = rows[i];
      // The echoed argv differs only by the --format pair.
      if (path.rfind("command.argv", 0) == 0) continue;
      const json* leaf = lookup(j, path);
      ASSERT_NE(leaf, nullptr) << path;
      if (leaf->is_string()) {
        EXPECT_EQ(leaf->get<std::string>(), value) << path;
      } else if (leaf->is_array()) {
        EXPECT_EQ(value, "[]") << path;
      } else {
        EXPECT_EQ(leaf->dump(), value) << path;
      }
    }
  }
}

TEST(Cli, ReplayReproducesThePayload) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"simulate", "--family", "C", "--ells", "3,5", "--samples", "5000", "--seed", "4", "--streams", "2"},
           {"density", "--family", "C", "--ells", "5,7", "--m", "2", "--squeeze", "der"},
           {"weil", "--q", "3", "--poly", "3,-5,1"},
           {"goursat", "--family", "C", "--ells", "5,7", "--seed", "8"}}) {
    const auto path = temp_file("replay.json");
    auto with_out = args;
    with_out.insert(with_out.end(), {"--output", path.string()});
    const CliRun first = run(with_out);
    std::ifstream f(path);
    const json stored = json::parse(f);
    const CliRun again = run({"replay", "--input", path.string()});
    EXPECT_EQ(again.code, first.code);
    const json replayed = json::parse(again.out);
    EXPECT_EQ(replayed["result"], stored["result"]);
    EXPECT_EQ(replayed["command"], stored["command"]);
    std::filesystem::remove(path);
  }
}

TEST(Cli, EchoesResolvedParameters) {
  const json j = run_json({"density", "--family", "C", "--ells", "3"});
  const auto argv = j["command"]["argv"].get<std::vector<std::string>>();
  for (const char* flag : {"--family", "--r", "--ells", "--m", "--squeeze"}) {
    EXPECT_NE(std::find(argv.begin(), argv.end(), flag), argv.end()) << flag;
  }
}

TEST(Cli, TimingIsOptIn) {
  EXPECT_FALSE(run_json({"cm-fraction", "--degree", "2", "--ell", "5"}).contains("timing"));
  EXPECT_TRUE(run_json({"cm-fraction", "--degree", "2", "--ell", "5", "--timing"}).contains("timing"));
}

TEST(Cli, ToCsvFlattensNestedKeys) {
  EXPECT_EQ(cli::to_csv(R"({"a":{"b":[1,"x,y"]},"c":[]})"), "field,value\na.b.0,1\na.b.1,\"x,y\"\nc,[]\n");
}
