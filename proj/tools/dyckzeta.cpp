// dyckzeta: zeta functions, periodic points and entropy of Markov-Dyck shifts.

#include <iostream>

#include "CLI11.hpp"
#include "dyckzeta/cli.hpp"

namespace cli = dyckzeta::cli;

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions, periodic points and entropy of Markov-Dyck shifts",
               "dyckzeta"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));

  cli::RunConfig cfg;
  std::string command;
  std::string format = "json";
  std::uint64_t a = 0, b = 0, c = 0;
  int window_factor = 0;

  app.add_option("command", command,
                 "zeta | counts | series | entropy | bounds | family | verify | report")
      ->required()
      ->check(CLI::IsMember({"zeta", "counts", "series", "entropy", "bounds",
                             "family", "verify", "report"}));
  app.add_option("--graph", cfg.graph_path, "graph JSON file");
  auto* opt_a = app.add_option("--a", a, "F(a,b,c) parameter a");
  auto* opt_b = app.add_option("--b", b, "F(a,b,c) parameter b");
  auto* opt_c = app.add_option("--c", c, "F(a,b,c) parameter c");
  app.add_option("--order", cfg.order, "series truncation order")->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "largest word length for the oracle")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "root bracket width")->capture_default_str();
  auto* opt_wf = app.add_option("--window-factor", window_factor,
                                "window factor of the fallback periodic check "
                                "(default max-n + 4)");
  app.add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--threads", cfg.threads, "oracle worker threads")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "oracle cap on appended letters")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  cfg.command = *cli::parse_command(command);
  cfg.format = *cli::parse_format(format);
  if (opt_a->count()) cfg.a = a;
  if (opt_b->count()) cfg.b = b;
  if (opt_c->count()) cfg.c = c;
  if (opt_wf->count()) cfg.window_factor = window_factor;
  return cli::run(cfg, std::cout, std::cerr);
}
