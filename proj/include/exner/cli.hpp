#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "exner/driver.hpp"

namespace exner {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` text; `#` starts a comment. Unknown keys, unparsable
/// values and invalid settings raise ConfigError naming the key and line.
///
/// Keys: scheme (first|second), cfl, fixed_dt, x_left, x_interface, x_right,
/// n_cells, g, a_g, m, rho0, u0, h0, zb0, forcing_amplitude, forcing_omega,
/// bc (nc|sc|ac), sigma, t_final, snapshot_times (comma separated), out_dir.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config; doubles are written with 17 significant digits.
std::string serialize_config(const RunConfig& cfg);

/// Shortest decimal form of t that parses back to the same double.
std::string format_time(double t);
std::filesystem::path snapshot_path(const std::filesystem::path& dir, double t);

/// CSV with header x,eta,q,zb,h,u and one row per cell.
void write_snapshot(const State& s, double t, const Grid& grid, const std::filesystem::path& dir);

struct SnapshotTable {
  std::vector<double> x, eta, q, zb, h, u;
};
SnapshotTable read_snapshot(const std::filesystem::path& file);

void write_diagnostics(const std::vector<StepDiagnostics>& diags, const std::filesystem::path& file);

/// Writes snapshots, diagnostics.csv and config.txt of one run into dir.
void write_run(const RunResult& r, const RunConfig& cfg, const std::filesystem::path& dir);

struct ReportRow {
  std::string strategy;
  double t = 0.0;
  ReflectionMetric metric;
};

struct CompareReport {
  std::vector<ReportRow> rows;
  RunConfig reference;

  const ReportRow& find(const std::string& strategy, double t) const;
};

/// Runs NC, SC, AC and the extended-domain reference from one configuration
/// (concurrently), and measures each strategy against the reference at every
/// snapshot time. When out_dir is non-empty, writes <out_dir>/<strategy>/...,
/// <out_dir>/reference/... and <out_dir>/reflection_report.csv.
CompareReport compare_mode(const RunConfig& cfg, const std::filesystem::path& out_dir,
                           double x_far = 0.0);

/// The sub-configurations compare_mode runs, in the order nc, sc, ac, reference.
std::vector<RunConfig> compare_configs(const RunConfig& cfg, double x_far);

void write_report(const CompareReport& report, const std::filesystem::path& file);

}  // namespace exner
