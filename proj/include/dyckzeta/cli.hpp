#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dyckzeta/closed_forms.hpp"
#include "dyckzeta/entropy.hpp"
#include "dyckzeta/errors.hpp"
#include "dyckzeta/graph.hpp"
#include "dyckzeta/series.hpp"

namespace dyckzeta::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "dyckzeta";
#ifdef DYCKZETA_VERSION
inline constexpr const char* kToolVersion = DYCKZETA_VERSION;
#else
inline constexpr const char* kToolVersion = "0.1.0";
#endif

enum class Command { Zeta, Counts, Series, Entropy, Bounds, Family, Verify, Report };
enum class Format { Json, Csv };

std::string to_string(Command c);
std::optional<Command> parse_command(std::string_view s);
std::string to_string(Format f);
std::optional<Format> parse_format(std::string_view s);

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidGraph = 2,
  kExitNonConvergence = 3,
  kExitVerifyMismatch = 4,
};

/// Bad command-line or configuration values (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Report;
  std::string graph_path;  ///< empty: use --a --b --c
  std::optional<std::uint64_t> a, b, c;
  std::size_t order = 32;
  std::size_t max_n = 8;
  double tol = 1e-10;
  std::optional<int> window_factor;  ///< default max_n + 4
  Format format = Format::Json;
  std::string out;  ///< empty: stdout
  unsigned threads = 1;
  std::uint64_t budget = 500'000'000;

  /// Throws UsageError.
  void validate() const;
  int resolved_window_factor() const;
  std::optional<FabcParams> family_params() const;
  Json to_json() const;
};

/// A named table for CSV output.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json doc;
  std::vector<Table> tables;
  int exit_code = kExitOk;
};

// Serialization helpers. Doubles are rounded to 12 significant digits.
Json number(double x);
std::string decimal(double x);
Json series_json(const Series& s);
Json entropy_json(const EntropyReport& r);
Json bounds_json(const BoundsSummary& b);
Json big_int_json(const BigInt& x);

/// Loads the configured graph (file, or F(a,b,c) from --a --b --c).
Graph load_graph(const RunConfig& cfg);

Report cmd_zeta(const RunConfig& cfg);
Report cmd_counts(const RunConfig& cfg);
Report cmd_series(const RunConfig& cfg);
Report cmd_entropy(const RunConfig& cfg);
Report cmd_bounds(const RunConfig& cfg);
Report cmd_family(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_report(const RunConfig& cfg);

/// Dispatches cfg.command. Library errors propagate.
Report build_report(const RunConfig& cfg);

/// Exit code for a library error.
int exit_code_for(const Error& e);

std::string render(const Report& r, Format f);

/// Validates, runs, and writes the report (or an error document to err).
/// Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dyckzeta::cli
