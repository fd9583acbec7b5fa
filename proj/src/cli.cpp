#include "exner/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

namespace exner {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& v) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not a number: '" + v + "'");
  return out;
}

std::size_t to_count(const std::string& v) {
  std::size_t out = 0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not a cell count: '" + v + "'");
  return out;
}

std::vector<double> to_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(item));
  }
  return out;
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream os(file);
  if (!os) throw std::runtime_error("cannot open " + file.string() + " for writing");
  os << text;
  if (!os) throw std::runtime_error("failed writing " + file.string());
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  double sigma = cfg.strategy.sigma;
  BcKind kind = cfg.strategy.kind;

  using Setter = void (*)(RunConfig&, const std::string&);
  static const std::map<std::string, Setter> setters = {
      {"scheme", [](RunConfig& c, const std::string& v) {
         if (v == "first") c.scheme = Scheme::first_order;
         else if (v == "second") c.scheme = Scheme::second_order;
         else throw std::invalid_argument("expected first or second, got '" + v + "'");
       }},
      {"cfl", [](RunConfig& c, const std::string& v) { c.cfl = to_double(v); }},
      {"fixed_dt", [](RunConfig& c, const std::string& v) {
         if (v.empty() || v == "none") c.fixed_dt.reset();
         else c.fixed_dt = to_double(v);
       }},
      {"x_left", [](RunConfig& c, const std::string& v) { c.x_left = to_double(v); }},
      {"x_interface", [](RunConfig& c, const std::string& v) { c.x_interface = to_double(v); }},
      {"x_right", [](RunConfig& c, const std::string& v) { c.x_right = to_double(v); }},
      {"n_cells", [](RunConfig& c, const std::string& v) { c.n_cells = to_count(v); }},
      {"g", [](RunConfig& c, const std::string& v) { c.params.g = to_double(v); }},
      {"a_g", [](RunConfig& c, const std::string& v) { c.params.a_g = to_double(v); }},
      {"m", [](RunConfig& c, const std::string& v) { c.params.m = to_double(v); }},
      {"rho0", [](RunConfig& c, const std::string& v) { c.params.rho0 = to_double(v); }},
      {"u0", [](RunConfig& c, const std::string& v) { c.u0 = to_double(v); }},
      {"h0", [](RunConfig& c, const std::string& v) { c.h0 = to_double(v); }},
      {"zb0", [](RunConfig& c, const std::string& v) { c.zb0 = to_double(v); }},
      {"forcing_amplitude", [](RunConfig& c, const std::string& v) { c.forcing_amplitude = to_double(v); }},
      {"forcing_omega", [](RunConfig& c, const std::string& v) { c.forcing_omega = to_double(v); }},
      {"t_final", [](RunConfig& c, const std::string& v) { c.t_final = to_double(v); }},
      {"snapshot_times", [](RunConfig& c, const std::string& v) { c.snapshot_times = to_list(v); }},
      {"out_dir", [](RunConfig& c, const std::string& v) { c.out_dir = v; }},
  };

  std::map<std::string, int> seen_at;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    seen_at[key] = line_no;
    try {
      if (key == "bc") {
        kind = parse_bc_kind(value);
      } else if (key == "sigma") {
        sigma = to_double(value);
      } else if (auto it = setters.find(key); it != setters.end()) {
        it->second(cfg, value);
      } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": key '" + key + "': " + e.what());
    }
  }
  cfg.strategy = {kind, sigma};

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    // name the key (and its line when it was given) that the message starts with
    const std::string msg = e.what();
    const std::string key = msg.substr(0, msg.find(' '));
    std::string where;
    if (auto it = seen_at.find(key); it != seen_at.end()) where = " (line " + std::to_string(it->second) + ")";
    throw ConfigError("invalid configuration: key '" + key + "'" + where + ": " + msg);
  }
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "scheme = " << (c.scheme == Scheme::first_order ? "first" : "second") << '\n';
  os << "cfl = " << fmt17(c.cfl) << '\n';
  if (c.fixed_dt) os << "fixed_dt = " << fmt17(*c.fixed_dt) << '\n';
  os << "x_left = " << fmt17(c.x_left) << '\n';
  os << "x_interface = " << fmt17(c.x_interface) << '\n';
  os << "x_right = " << fmt17(c.x_right) << '\n';
  os << "n_cells = " << c.n_cells << '\n';
  os << "g = " << fmt17(c.params.g) << '\n';
  os << "a_g = " << fmt17(c.params.a_g) << '\n';
  os << "m = " << fmt17(c.params.m) << '\n';
  os << "rho0 = " << fmt17(c.params.rho0) << '\n';
  os << "u0 = " << fmt17(c.u0) << '\n';
  os << "h0 = " << fmt17(c.h0) << '\n';
  os << "zb0 = " << fmt17(c.zb0) << '\n';
  os << "forcing_amplitude = " << fmt17(c.forcing_amplitude) << '\n';
  os << "forcing_omega = " << fmt17(c.forcing_omega) << '\n';
  os << "bc = " << to_string(c.strategy.kind) << '\n';
  os << "sigma = " << fmt17(c.strategy.sigma) << '\n';
  os << "t_final = " << fmt17(c.t_final) << '\n';
  os << "snapshot_times = ";
  for (std::size_t i = 0; i < c.snapshot_times.size(); ++i)
    os << (i ? "," : "") << fmt17(c.snapshot_times[i]);
  os << '\n';
  os << "out_dir = " << c.out_dir << '\n';
  return os.str();
}

std::string format_time(double t) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, t);
    if (std::strtod(buf, nullptr) == t) break;
  }
  return buf;
}

fs::path snapshot_path(const fs::path& dir, double t) {
  return dir / ("snapshot_t" + format_time(t) + ".csv");
}

void write_snapshot(const State& s, double t, const Grid& grid, const fs::path& dir) {
  std::ostringstream os;
  os << "x,eta,q,zb,h,u\n";
  char buf[256];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", grid.center(i), s.eta[i],
                  s.q[i], s.zb[i], s.h(i), s.u(i));
    os << buf;
  }
  write_text(snapshot_path(dir, t), os.str());
}

SnapshotTable read_snapshot(const fs::path& file) {
  std::ifstream is(file);
  if (!is) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  std::getline(is, line);
  if (trim(line) != "x,eta,q,zb,h,u") throw std::runtime_error(file.string() + ": unexpected header");
  SnapshotTable t;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(to_double(trim(cell)));
    if (row.size() != 6) throw std::runtime_error(file.string() + ": malformed row");
    t.x.push_back(row[0]);
    t.eta.push_back(row[1]);
    t.q.push_back(row[2]);
    t.zb.push_back(row[3]);
    t.h.push_back(row[4]);
    t.u.push_back(row[5]);
  }
  return t;
}

void write_diagnostics(const std::vector<StepDiagnostics>& diags, const fs::path& file) {
  std::ostringstream os;
  os << "t,dt,mcfl,lambda_max,total_eta,total_zb,max_abs_u,min_h\n";
  char buf[512];
  for (const auto& d : diags) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", d.t, d.dt,
                  d.mcfl, d.lambda_max, d.total_eta, d.total_zb, d.max_abs_u, d.min_h);
    os << buf;
  }
  write_text(file, os.str());
}

void write_run(const RunResult& r, const RunConfig& cfg, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& snap : r.snapshots) write_snapshot(snap.state, snap.t, r.grid, dir);
  write_diagnostics(r.diagnostics, dir / "diagnostics.csv");
  write_text(dir / "config.txt", serialize_config(cfg));
}

const ReportRow& CompareReport::find(const std::string& strategy, double t) const {
  for (const auto& r : rows)
    if (r.strategy == strategy && r.t == t) return r;
  throw std::out_of_range("no report row for " + strategy + " at t=" + format_time(t));
}

std::vector<RunConfig> compare_configs(const RunConfig& cfg, double x_far) {
  std::vector<RunConfig> out;
  for (BcKind k : {BcKind::nc, BcKind::sc, BcKind::ac}) {
    RunConfig c = cfg;
    c.strategy.kind = k;
    out.push_back(c);
  }
  out.push_back(reference_config(cfg, x_far));
  return out;
}

CompareReport compare_mode(const RunConfig& cfg, const fs::path& out_dir, double x_far) {
  if (!(x_far > 0.0) || x_far <= cfg.x_right) x_far = std::max(reference_far_edge(cfg), cfg.x_right);
  const std::vector<RunConfig> configs = compare_configs(cfg, x_far);
  const char* names[] = {"nc", "sc", "ac", "reference"};

  std::vector<std::future<RunResult>> jobs;
  for (const auto& c : configs)
    jobs.push_back(std::async(std::launch::async, [c] { return run(c); }));
  std::vector<RunResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  CompareReport report;
  report.reference = configs.back();
  for (int k = 0; k < 3; ++k)
    for (double t : cfg.snapshot_times)
      report.rows.push_back({names[k], t, reflection_metric(results[k], results.back(), t)});

  if (!out_dir.empty()) {
    for (int k = 0; k < 4; ++k) write_run(results[k], configs[k], out_dir / names[k]);
    write_report(report, out_dir / "reflection_report.csv");
  }
  return report;
}

void write_report(const CompareReport& report, const fs::path& file) {
  std::ostringstream os;
  os << "strategy,t,linf_h,l2_h\n";
  char buf[256];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g\n", r.strategy.c_str(), r.t, r.metric.linf_h,
                  r.metric.l2_h);
    os << buf;
  }
  write_text(file, os.str());
}

}  // namespace exner
