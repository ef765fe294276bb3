#include "checkers/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "checkers/asymptotics.hpp"
#include "checkers/exact.hpp"
#include "checkers/spectral.hpp"

namespace checkers::cli {

namespace {

constexpr double kTimeMatchTol = 1e-9;

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::evolve, "evolve"},         {Command::compare, "compare"},
    {Command::continuum, "continuum"},   {Command::distribution, "distribution"},
    {Command::chirality, "chirality"},   {Command::airy, "airy"},
};

LatticeParams params_of(const RunConfig& cfg) { return LatticeParams(cfg.mass, cfg.step); }

void require_not_seeded(const RunConfig& cfg) {
  if (cfg.field.kind == FieldSpec::Kind::seeded)
    throw ConfigError(std::string(command_name(cfg.command)) +
                      " has a limit only for the trivial or homogeneous field");
}

void require_homogeneous(const RunConfig& cfg) {
  if (cfg.field.kind != FieldSpec::Kind::homogeneous)
    throw ConfigError(std::string(command_name(cfg.command)) + " requires --field homogeneous");
}

std::string format_number(double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "trivial") return {Kind::trivial, 0};
  if (text == "homogeneous") return {Kind::homogeneous, 0};
  const std::string prefix = "seeded:";
  if (text.rfind(prefix, 0) == 0) {
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    std::int64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec == std::errc() && ptr == last && first != last)
      return {Kind::seeded, static_cast<std::uint64_t>(seed)};
  }
  throw ConfigError("unrecognised field '" + text + "'; expected trivial, homogeneous or seeded:<int>");
}

GaugeField FieldSpec::make() const {
  switch (kind) {
    case Kind::trivial: return GaugeField::trivial();
    case Kind::homogeneous: return GaugeField::homogeneous();
    case Kind::seeded: return GaugeField::seeded(seed);
  }
  return GaugeField::trivial();
}

Command parse_command(const std::string& name) {
  for (const auto& c : kCommands)
    if (name == c.name) return c.command;
  throw ConfigError("unknown command '" + name + "'");
}

const char* command_name(Command command) {
  for (const auto& c : kCommands)
    if (command == c.command) return c.name;
  return "?";
}

void validate(RunConfig& cfg) {
  if (!std::isfinite(cfg.mass) || cfg.mass < 0.0) throw ConfigError("--mass must be finite and >= 0");
  if (!std::isfinite(cfg.step) || cfg.step <= 0.0) throw ConfigError("--step must be finite and > 0");
  if (!std::isfinite(cfg.time) || cfg.time <= 0.0) throw ConfigError("--t must be finite and > 0");
  if (!std::isfinite(cfg.tolerance) || cfg.tolerance <= 0.0) throw ConfigError("--tolerance must be > 0");
  if (cfg.quad_points < 0) throw ConfigError("--quad-points must be >= 0");

  const double ratio = cfg.time / cfg.step;
  if (ratio > 1e12) throw ConfigError("--t / --step is too large");
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > kTimeMatchTol * std::max(1.0, ratio))
    throw ConfigError("--t must be an integer multiple of --step");
  cfg.time_index = static_cast<std::int64_t>(rounded);
  if (cfg.time_index < 1) throw ConfigError("--t / --step must be >= 1");

  const double c = cfg.mass * cfg.step;
  switch (cfg.command) {
    case Command::evolve:
      break;
    case Command::compare:
      require_homogeneous(cfg);
      if (cfg.mass == 0.0) throw ConfigError("compare needs --mass > 0 for the integral route");
      if (cfg.quad_points != 0 && cfg.quad_points < spectral::min_quad_points(cfg.time_index))
        throw ConfigError("--quad-points below " + std::to_string(spectral::min_quad_points(cfg.time_index)) +
                          " for this time");
      break;
    case Command::continuum:
      require_not_seeded(cfg);
      if (cfg.mass == 0.0) throw ConfigError("continuum needs --mass > 0");
      break;
    case Command::distribution:
      require_not_seeded(cfg);
      if (cfg.mass == 0.0) throw ConfigError("distribution needs --mass > 0");
      break;
    case Command::chirality:
      require_not_seeded(cfg);
      if (cfg.field.kind == FieldSpec::Kind::trivial && c > 1.0)
        throw ConfigError("the zero-field chirality limit needs mass * step <= 1");
      break;
    case Command::airy:
      require_homogeneous(cfg);
      if (c <= 0.0 || c > 1.0) throw ConfigError("airy needs 0 < mass * step <= 1");
      if (cfg.time_index % 4 != 2) throw ConfigError("airy needs t / step = 2 mod 4");
      break;
  }
}

Table cmd_evolve(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const WaveSlice slice = evolve_to(cfg.time_index, params, cfg.field.make());
  Table table{{"x", "a1", "a2", "P"}, {}};
  for (std::int64_t xi = slice.min_x(); xi <= slice.max_x(); xi += 2) {
    const Amplitude a = slice.at(xi);
    table.rows.push_back({static_cast<double>(xi) * cfg.step, a.a1, a.a2, a.probability()});
  }
  return table;
}

RunResult cmd_compare(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const std::int64_t ti = cfg.time_index;
  const WaveSlice slice = evolve_to(ti, params, GaugeField::homogeneous());
  const std::int64_t nodes = cfg.quad_points != 0 ? cfg.quad_points : 2 * spectral::min_quad_points(ti);

  RunResult result;
  result.table.columns = {"x",         "a1_recurrence", "a2_recurrence", "a1_closed",   "a2_closed",
                          "a1_integral", "a2_integral", "max_abs_diff"};
  for (std::int64_t xi = slice.min_x(); xi <= slice.max_x(); xi += 2) {
    const Amplitude rec = slice.at(xi);
    const Amplitude closed =
        exact::amplitude_closed_exact(exact::DiagCoords::from_point({xi, ti}), params.coupling());
    const Amplitude integral = spectral::amplitude_integral({xi, ti}, params, nodes);
    const double diff = std::max({std::abs(rec.a1 - closed.a1), std::abs(rec.a2 - closed.a2),
                                  std::abs(rec.a1 - integral.a1), std::abs(rec.a2 - integral.a2)});
    if (!(diff <= cfg.tolerance)) result.disagreement = true;
    result.table.rows.push_back({static_cast<double>(xi) * cfg.step, rec.a1, rec.a2, closed.a1, closed.a2,
                                 integral.a1, integral.a2, diff});
  }
  return result;
}

Table cmd_continuum(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const std::int64_t ti = cfg.time_index;
  const std::int64_t t_grid = 4 * (ti / 4);
  const bool field = cfg.field.kind == FieldSpec::Kind::homogeneous;
  const double eps = cfg.step;

  Table table{{"x", "lattice_scaled", "bessel_limit"}, {}};
  if (t_grid < 1) return table;
  const WaveSlice slice = evolve_to(t_grid, params, cfg.field.make());
  for (std::int64_t xi = -4 * ((ti - 1) / 4); xi < ti; xi += 4) {
    const double x = static_cast<double>(xi) * eps;
    const asymptotics::ContinuumPoint pt(x, cfg.time);
    const double lattice = slice.at(xi).probability() / (4.0 * eps * eps);
    const double limit = field ? asymptotics::continuum_field(pt, cfg.mass).p_density
                               : asymptotics::continuum_free(pt, cfg.mass);
    table.rows.push_back({x, lattice, limit});
  }
  return table;
}

Table cmd_distribution(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const WaveSlice slice = evolve_to(cfg.time_index, params, cfg.field.make());
  const bool field = cfg.field.kind == FieldSpec::Kind::homogeneous;
  Table table{{"v", "empirical_cdf", "limit_cdf"}, {}};
  for (int k = -100; k <= 100; ++k) {
    const double v = k / 100.0;
    const double limit = field ? spectral::limit_cdf(v, params) : spectral::limit_cdf_free(v, params);
    table.rows.push_back({v, cdf_empirical(slice, v), limit});
  }
  return table;
}

Table cmd_chirality(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const GaugeField field = cfg.field.make();
  const bool homogeneous = cfg.field.kind == FieldSpec::Kind::homogeneous;
  const double even = homogeneous ? asymptotics::chirality_limit(asymptotics::Parity::even, params)
                                  : asymptotics::chirality_limit_free(params);
  const double odd = homogeneous ? asymptotics::chirality_limit(asymptotics::Parity::odd, params) : even;

  Table table{{"t", "sum_a1_sq", "limit"}, {}};
  WaveSlice slice = WaveSlice::initial(field);
  for (std::int64_t ti = 1;; ++ti) {
    table.rows.push_back({static_cast<double>(ti) * cfg.step, chirality_reversal_prob(slice),
                          ti % 2 == 0 ? even : odd});
    if (ti == cfg.time_index) break;
    slice = evolve_step(slice, params, field);
  }
  return table;
}

Table cmd_airy(const RunConfig& cfg) {
  const LatticeParams params = params_of(cfg);
  const std::int64_t ti = cfg.time_index;
  const WaveSlice slice = evolve_to(ti, params, GaugeField::homogeneous());
  const double n = params.norm();
  Table table{{"x", "a1_lattice", "a1_airy"}, {}};
  for (std::int64_t xi = -4 * (ti / 4); xi <= ti; xi += 4) {
    if (std::abs(static_cast<double>(xi)) * n >= static_cast<double>(ti)) continue;
    table.rows.push_back({static_cast<double>(xi) * cfg.step, slice.at(xi).a1,
                          asymptotics::airy_approx_a1({xi, ti}, params)});
  }
  return table;
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::evolve: return {cmd_evolve(cfg), false};
    case Command::compare: return cmd_compare(cfg);
    case Command::continuum: return {cmd_continuum(cfg), false};
    case Command::distribution: return {cmd_distribution(cfg), false};
    case Command::chirality: return {cmd_chirality(cfg), false};
    case Command::airy: return {cmd_airy(cfg), false};
  }
  throw ConfigError("unknown command");
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };

  Table table;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV input");
  table.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.columns.size()) throw ConfigError("CSV row width does not match header");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0') throw ConfigError("bad CSV number '" + cell + "'");
      row.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    auto column = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) column.push_back(row[j]);
    doc[table.columns[j]] = std::move(column);
  }
  out << doc.dump(2) << '\n';
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feynman checkers in a +-1 gauge field: lattice experiments and limit checks"};
  std::string command;
  std::string field = "homogeneous";
  std::string format = "csv";
  RunConfig cfg;

  app.add_option("command,--command", command,
                 "evolve | compare | continuum | distribution | chirality | airy")
      ->required();
  app.add_option("--mass", cfg.mass, "electron mass m")->capture_default_str();
  app.add_option("--step", cfg.step, "lattice step eps")->capture_default_str();
  app.add_option("--t", cfg.time, "physical time; t/eps must be an integer")->capture_default_str();
  app.add_option("--field", field, "trivial | homogeneous | seeded:<int>")->capture_default_str();
  app.add_option("--quad-points", cfg.quad_points, "trapezoid nodes for compare (0 = default)");
  app.add_option("--out", cfg.output_path, "output file (default stdout)");
  app.add_option("--format", format, "csv | json")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "oracle agreement tolerance for compare")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunResult result;
  try {
    cfg.command = parse_command(command);
    cfg.field = FieldSpec::parse(field);
    if (format == "csv") {
      cfg.format = Format::csv;
    } else if (format == "json") {
      cfg.format = Format::json;
    } else {
      throw ConfigError("--format must be csv or json");
    }
    validate(cfg);
    result = run(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const checkers::Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "config error: cannot open " << cfg.output_path << '\n';
      return kExitConfig;
    }
    sink = &file;
  }
  if (cfg.format == Format::csv) {
    write_csv(result.table, *sink);
  } else {
    write_json(result.table, *sink);
  }
  sink->flush();

  if (result.disagreement) {
    err << "oracle disagreement above tolerance " << format_number(cfg.tolerance) << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace checkers::cli
