#include "doctest.h"
#include "support.hpp"

#include <sstream>

#include "dyckzeta/cli.hpp"

using namespace dyckzeta;
using namespace dyckzeta::cli;

namespace {

std::string data(const char* name) { return std::string(DYCKZETA_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig with_graph(Command c, const char* file) {
  RunConfig cfg;
  cfg.command = c;
  cfg.graph_path = data(file);
  return cfg;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("command and format names") {
  for (auto c : {Command::Zeta, Command::Counts, Command::Series, Command::Entropy,
                 Command::Bounds, Command::Family, Command::Verify, Command::Report}) {
    CHECK(parse_command(to_string(c)) == c);
  }
  CHECK_FALSE(parse_command("plot"));
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.command = Command::Entropy;
  CHECK_THROWS_AS(cfg.validate(), UsageError);  // no graph
  cfg.a = 1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);  // partial family
  cfg.b = 1;
  cfg.c = 1;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.family_params() == FabcParams{1, 1, 1});
  cfg.graph_path = "x.json";
  CHECK_THROWS_AS(cfg.validate(), UsageError);  // both
  cfg.graph_path.clear();
  cfg.order = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.order = 32;
  cfg.tol = -1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.tol = 1e-10;
  CHECK(cfg.resolved_window_factor() == 12);
  cfg.window_factor = 3;
  CHECK(cfg.resolved_window_factor() == 3);
  CHECK(cfg.to_json()["order"] == 32);
}

TEST_CASE("numbers carry twelve significant digits") {
  CHECK(decimal(3 * std::log(2.0) - std::log(3.0)) == "0.980829253012");
  CHECK(number(1.0 / 3).get<double>() == 0.333333333333);
  CHECK(number(std::nan("")).is_null());
}

TEST_CASE("entropy of F") {
  const auto r = run_cfg(with_graph(Command::Entropy, "fib.json"));
  REQUIRE(r.code == kExitOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["tool"] == "dyckzeta");
  CHECK(doc["command"] == "entropy");
  CHECK(doc["entropy"]["value"].get<double>() == doctest::Approx(0.980829253012));
}

TEST_CASE("counts of F") {
  auto cfg = with_graph(Command::Counts, "fib.json");
  cfg.max_n = 4;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == kExitOk);
  const auto rows = Json::parse(r.out)["oracle_counts"];
  REQUIRE(rows.size() == 4);
  CHECK(rows[3]["words"] == 150);
  CHECK(rows[3]["periodic"] == 84);
}

TEST_CASE("verify passes on the data graphs") {
  for (const char* file : {"fib.json", "dyck2.json", "fabc_1_2_3.json", "three_cycle.json"}) {
    auto cfg = with_graph(Command::Verify, file);
    cfg.max_n = 5;
    const auto r = run_cfg(cfg);
    INFO(file, r.out, r.err);
    CHECK(r.code == kExitOk);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cfg(with_graph(Command::Entropy, "reducible.json")).code == kExitInvalidGraph);
  CHECK(run_cfg(with_graph(Command::Entropy, "missing.json")).code == kExitInvalidGraph);
  RunConfig none;
  none.command = Command::Zeta;
  const auto usage = run_cfg(none);
  CHECK(usage.code == kExitUsage);
  CHECK(usage.out.empty());
  CHECK_FALSE(usage.err.empty());
  CHECK(exit_code_for(Error(ErrorKind::SingularityBeforeRoot, "x")) == kExitNonConvergence);
  CHECK(exit_code_for(Error(ErrorKind::InternalInconsistency, "x")) == kExitVerifyMismatch);
  CHECK(exit_code_for(Error(ErrorKind::NotIrreducible, "x")) == kExitInvalidGraph);
}

TEST_CASE("csv output") {
  RunConfig cfg;
  cfg.command = Command::Family;
  cfg.a = 1;
  cfg.b = 1;
  cfg.c = 2;
  cfg.format = Format::Csv;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("# dyckzeta ", 0) == 0);
  CHECK(r.out.find("# config ") != std::string::npos);
  CHECK(r.out.find("1.09861228867") != std::string::npos);
}

TEST_CASE("render quotes csv fields") {
  Report rep;
  rep.tables.push_back({"t", {"a", "b"}, {{"x,y", "say \"hi\""}}});
  const auto text = render(rep, Format::Csv);
  CHECK(text.find("\"x,y\",\"say \"\"hi\"\"\"") != std::string::npos);
}

}  // TEST_SUITE
