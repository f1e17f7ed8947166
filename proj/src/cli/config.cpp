#include <array>
#include <utility>

#include "dyckzeta/cli.hpp"

namespace dyckzeta::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::Zeta, "zeta"},
    {Command::Counts, "counts"},
    {Command::Series, "series"},
    {Command::Entropy, "entropy"},
    {Command::Bounds, "bounds"},
    {Command::Family, "family"},
    {Command::Verify, "verify"},
    {Command::Report, "report"},
}};

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view s) {
  for (const auto& [cmd, name] : kCommands) {
    if (s == name) return cmd;
  }
  return std::nullopt;
}

std::string to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (order < 2) throw UsageError("--order must be >= 2");
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  if (!(tol > 0)) throw UsageError("--tol must be > 0");
  if (window_factor && *window_factor < 2) {
    throw UsageError("--window-factor must be >= 2");
  }
  if (threads < 1) throw UsageError("--threads must be >= 1");
  const bool any_abc = a || b || c;
  const bool all_abc = a && b && c;
  if (any_abc && !all_abc) {
    throw UsageError("--a, --b and --c must be given together");
  }
  if (all_abc && (*a == 0 || *b == 0 || *c == 0)) {
    throw UsageError("--a, --b and --c must be positive integers");
  }
  if (command == Command::Family) {
    if (!all_abc) throw UsageError("family needs --a, --b and --c");
    return;
  }
  if (graph_path.empty() && !all_abc) {
    throw UsageError(to_string(command) + " needs --graph FILE (or --a --b --c)");
  }
  if (!graph_path.empty() && all_abc) {
    throw UsageError("give either --graph or --a --b --c, not both");
  }
}

int RunConfig::resolved_window_factor() const {
  return window_factor ? *window_factor : static_cast<int>(max_n) + 4;
}

std::optional<FabcParams> RunConfig::family_params() const {
  if (!(a && b && c)) return std::nullopt;
  return FabcParams{*a, *b, *c};
}

Json RunConfig::to_json() const {
  Json doc;
  doc["command"] = to_string(command);
  doc["graph"] = graph_path.empty() ? Json(nullptr) : Json(graph_path);
  doc["a"] = a ? Json(*a) : Json(nullptr);
  doc["b"] = b ? Json(*b) : Json(nullptr);
  doc["c"] = c ? Json(*c) : Json(nullptr);
  doc["order"] = order;
  doc["max_n"] = max_n;
  doc["tol"] = number(tol);
  doc["window_factor"] = resolved_window_factor();
  doc["format"] = to_string(format);
  doc["out"] = out.empty() ? Json("-") : Json(out);
  doc["threads"] = threads;
  doc["budget"] = budget;
  return doc;
}

}  // namespace dyckzeta::cli
