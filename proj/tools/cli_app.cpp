// Copyright 2026 The uscgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "csv_output.hpp"
#include "run_config.hpp"
#include "uscgate/metrics.hpp"

namespace uscgate::cli {
namespace {

// Raw flag values; each is applied only when given on the command line.
struct Flags {
  std::string config_path;
  std::string out_path;
  std::string plot_path;
  std::string protocol;
  std::string model;
  std::string off_mode;
  std::string drive_frame;
  double g = 0;
  int fock = 0;
  double delta_off = 0;
  double drive_ratio = 0;
  double tol = 0;
  double from = 0;
  double to = 0;
  int points = 0;
  unsigned threads = 0;
  double converge_tol = 0;
  int start_fock = 0;
  int cap = 0;
};

struct Registered {
  std::vector<std::function<void(RunConfig&)>> appliers;
  CLI::Option* g = nullptr;
};

template <typename T, typename Apply>
void flag(CLI::App& app, Registered& reg, const std::string& name, T& slot,
          const std::string& help, Apply apply) {
  CLI::Option* opt = app.add_option(name, slot, help);
  reg.appliers.push_back([opt, &slot, apply](RunConfig& cfg) {
    if (opt->count() > 0) apply(cfg, slot);
  });
  if (name == "--g") reg.g = opt;
}

void add_common(CLI::App& app, Flags& f, Registered& reg) {
  app.add_option("--config", f.config_path, "JSON config file; flags override its values");
  app.add_option("--out", f.out_path, "Write the CSV here instead of standard output");
  flag(app, reg, "--protocol", f.protocol, "1 or 2",
       [](RunConfig& c, const std::string& v) { c.protocol = parse_protocol(v); });
  flag(app, reg, "--model", f.model, "rwa or full",
       [](RunConfig& c, const std::string& v) { c.model = parse_model(v); });
  flag(app, reg, "--fock", f.fock, "Fock-space dimension N",
       [](RunConfig& c, int v) { c.fock_dim = v; });
  flag(app, reg, "--off-mode", f.off_mode, "hard or detuned",
       [](RunConfig& c, const std::string& v) { c.off_mode = parse_off_mode(v); });
  flag(app, reg, "--delta-off", f.delta_off, "Detuning of switched-off transitions (detuned mode)",
       [](RunConfig& c, double v) { c.delta_off = v; });
  flag(app, reg, "--drive-frame", f.drive_frame, "rotating or lab",
       [](RunConfig& c, const std::string& v) { c.drive_frame = parse_frame(v); });
  flag(app, reg, "--drive-ratio", f.drive_ratio, "Omega / g for the classical drive",
       [](RunConfig& c, double v) { c.drive_ratio = v; });
  flag(app, reg, "--int-tol", f.tol, "Integrator local error tolerance",
       [](RunConfig& c, double v) { c.tol = v; });
}

RunConfig resolve(const Flags& f, const Registered& reg) {
  RunConfig cfg = f.config_path.empty() ? RunConfig{} : load_config(f.config_path);
  for (const auto& apply : reg.appliers) apply(cfg);
  cfg.validate();
  return cfg;
}

// Writes to --out when given, otherwise to `fallback`.
bool emit(const std::string& path, std::ostream& fallback, std::ostream& err,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(fallback);
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  writer(file);
  return static_cast<bool>(file);
}

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

int cmd_run(const RunConfig& cfg, const Flags& f, std::ostream& out, std::ostream& err) {
  const SweepPlan plan = cfg.point_plan();
  const SpaceDescriptor space(cfg.fock_dim);
  const Protocol protocol = make_protocol(cfg.protocol);
  const SystemParams params = plan.params_at(cfg.g);
  const ProtocolRun run = run_protocol(protocol, params, cfg.model, plan.input, space, plan.run);
  const GateScore s =
      score(reference_output(protocol, params, plan.input, space, plan.run), run.final_state);

  for (const std::string& line : describe(cfg)) out << line << '\n';
  out << "protocol " << protocol_name(cfg.protocol) << ", model " << model_name(cfg.model)
      << ", g/omega_r " << format_number(cfg.g) << ", fock_dim " << cfg.fock_dim << '\n';
  out << "fidelity " << fixed(s.fidelity) << '\n';
  out << "leakage " << fixed(s.leakage) << '\n';
  out << "photon_tail " << format_number(s.photon_tail) << '\n';
  out << "norm_drift " << format_number(run.norm_drift) << '\n';
  out << "gate_time " << format_number(run.total_time) << '\n';

  SweepRecord rec;
  rec.g_over_omega_r = cfg.g;
  rec.fidelity = s.fidelity;
  rec.leakage = s.leakage;
  rec.fock_dim = cfg.fock_dim;
  const std::vector<SweepRecord> records{rec};
  if (!emit(f.out_path, out, err,
            [&](std::ostream& os) { write_sweep_csv(os, cfg, records); })) {
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const Flags& f, std::ostream& out, std::ostream& err) {
  const std::vector<SweepRecord> records = run_sweep(cfg.sweep_plan());
  if (!emit(f.out_path, out, err,
            [&](std::ostream& os) { write_sweep_csv(os, cfg, records); })) {
    return kExitInvalid;
  }
  if (!f.plot_path.empty()) {
    std::ofstream plot(f.plot_path, std::ios::binary);
    if (!plot) {
      err << "error: cannot write '" << f.plot_path << "'\n";
      return kExitInvalid;
    }
    write_plot_data(plot, cfg, records);
  }
  int failures = 0;
  for (const SweepRecord& r : records) {
    if (!r.ok()) {
      ++failures;
      err << "error at g/omega_r = " << format_number(r.g_over_omega_r) << ": " << r.error
          << '\n';
    }
  }
  if (!f.out_path.empty()) {
    out << "wrote " << records.size() << " rows to " << f.out_path << '\n';
  }
  return failures == 0 ? kExitOk : kExitNumerical;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const ConvergenceResult r = converge_fock(cfg.point_plan(), cfg.g, cfg.converge_start,
                                            cfg.converge_tol, cfg.fock_cap);
  for (const std::string& line : describe(cfg)) out << line << '\n';
  for (const auto& [n, fid] : r.history) {
    out << "# F(" << n << ") = " << format_number(fid) << '\n';
  }
  out << "N=" << r.fock_dim << " F=" << format_number(r.fidelity) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resonant CPHASE gate simulator for two qutrits and one resonator mode",
               "uscgate"};
  app.require_subcommand(1);

  Flags f;
  Registered run_reg, sweep_reg, conv_reg;

  CLI::App* run = app.add_subcommand("run", "Run one protocol instance");
  add_common(*run, f, run_reg);
  flag(*run, run_reg, "--g", f.g, "Coupling strength g / omega_r, in (0, 1)",
       [](RunConfig& c, double v) { c.g = v; });

  CLI::App* sweep = app.add_subcommand("sweep", "Fidelity versus g / omega_r");
  add_common(*sweep, f, sweep_reg);
  flag(*sweep, sweep_reg, "--from", f.from, "First grid value",
       [](RunConfig& c, double v) { c.sweep_from = v; });
  flag(*sweep, sweep_reg, "--to", f.to, "Last grid value",
       [](RunConfig& c, double v) { c.sweep_to = v; });
  flag(*sweep, sweep_reg, "--points", f.points, "Number of grid points",
       [](RunConfig& c, int v) { c.sweep_points = v; });
  flag(*sweep, sweep_reg, "--threads", f.threads, "Worker threads (0 = all cores)",
       [](RunConfig& c, unsigned v) { c.threads = v; });
  sweep->add_option("--plot-data", f.plot_path, "Also write gnuplot two-column data here");

  CLI::App* conv = app.add_subcommand("converge", "Find a converged Fock truncation");
  add_common(*conv, f, conv_reg);
  flag(*conv, conv_reg, "--g", f.g, "Coupling strength g / omega_r, in (0, 1)",
       [](RunConfig& c, double v) { c.g = v; });
  flag(*conv, conv_reg, "--tol", f.converge_tol, "Convergence tolerance on |F(N) - F(2N)|",
       [](RunConfig& c, double v) { c.converge_tol = v; });
  flag(*conv, conv_reg, "--start", f.start_fock, "Starting Fock dimension (>= 4)",
       [](RunConfig& c, int v) { c.converge_start = v; });
  flag(*conv, conv_reg, "--cap", f.cap, "Largest Fock dimension to try",
       [](RunConfig& c, int v) { c.fock_cap = v; });

  std::vector<const char*> argv{"uscgate"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (run->parsed()) {
      if (!f.config_path.empty() || run_reg.g->count() > 0) {
        return cmd_run(resolve(f, run_reg), f, out, err);
      }
      err << "error: run needs --g or a config file\n";
      return kExitInvalid;
    }
    if (sweep->parsed()) return cmd_sweep(resolve(f, sweep_reg), f, out, err);
    if (conv_reg.g->count() == 0) {
      err << "error: converge needs --g\n";
      return kExitInvalid;
    }
    return cmd_converge(resolve(f, conv_reg), out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace uscgate::cli
