#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "checkers/lattice.hpp"

// Experiment runner behind the checkers_cli tool. Each command turns a
// RunConfig into a table with a fixed header.
namespace checkers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitDisagreement = 4;

enum class Command { evolve, compare, continuum, distribution, chirality, airy };
enum class Format { csv, json };

struct FieldSpec {
  enum class Kind { trivial, homogeneous, seeded };
  Kind kind = Kind::homogeneous;
  std::uint64_t seed = 0;

  /// Accepts "trivial", "homogeneous" and "seeded:<int>".
  static FieldSpec parse(const std::string& text);
  GaugeField make() const;
};

struct RunConfig {
  Command command = Command::evolve;
  double mass = 1.0;
  double step = 1.0;
  double time = 1.0;
  std::int64_t time_index = 1;
  FieldSpec field;
  std::int64_t quad_points = 0;  // 0 picks the default for the time index
  std::string output_path;       // empty writes to the given stream
  Format format = Format::csv;
  double tolerance = 1e-8;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunResult {
  Table table;
  bool disagreement = false;
};

Command parse_command(const std::string& name);
const char* command_name(Command command);

/// Derives time_index from time and step and checks every precondition of
/// the selected command. Throws ConfigError.
void validate(RunConfig& cfg);

RunResult run(const RunConfig& cfg);

Table cmd_evolve(const RunConfig& cfg);
RunResult cmd_compare(const RunConfig& cfg);
Table cmd_continuum(const RunConfig& cfg);
Table cmd_distribution(const RunConfig& cfg);
Table cmd_chirality(const RunConfig& cfg);
Table cmd_airy(const RunConfig& cfg);

/// Header line, then one row per line with %.17g numbers; LF line endings.
void write_csv(const Table& table, std::ostream& out);
Table read_csv(std::istream& in);
/// {"column": [values...], ...} in header order.
void write_json(const Table& table, std::ostream& out);

/// Parses argv, runs, writes output; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace checkers::cli
