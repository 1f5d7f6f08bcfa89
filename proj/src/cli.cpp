// Copyright 2026 The bscap Authors
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

#include "bscap/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bscap/ambient.hpp"
#include "bscap/capacity.hpp"
#include "bscap/config.hpp"
#include "bscap/csv.hpp"
#include "bscap/figures.hpp"
#include "bscap/regulatory.hpp"
#include "bscap/sweep.hpp"

namespace bscap::cli {
namespace {

struct Options {
  bool strict = false;
  bool quiet = false;
  bool audit = false;
  std::string config_path;
  std::string out_path;
  std::string preset;
};

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string format_hz(double hz) {
  char buf[64];
  if (hz >= 1e9) {
    std::snprintf(buf, sizeof buf, "%g GHz", hz / 1e9);
  } else if (hz >= 1e6) {
    std::snprintf(buf, sizeof buf, "%g MHz", hz / 1e6);
  } else if (hz >= 1e3) {
    std::snprintf(buf, sizeof buf, "%g kHz", hz / 1e3);
  } else {
    std::snprintf(buf, sizeof buf, "%g Hz", hz);
  }
  return buf;
}

std::string format_bps(double bps) {
  char buf[64];
  if (bps >= 1e9) {
    std::snprintf(buf, sizeof buf, "%.4g Gbps", bps / 1e9);
  } else if (bps >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.4g Mbps", bps / 1e6);
  } else if (bps >= 1e3) {
    std::snprintf(buf, sizeof buf, "%.4g kbps", bps / 1e3);
  } else {
    std::snprintf(buf, sizeof buf, "%.4g bps", bps);
  }
  return buf;
}

void line(std::ostream& out, std::string_view label, const std::string& value) {
  out << "  " << label;
  for (std::size_t i = label.size(); i < 34; ++i) out << ' ';
  out << value << '\n';
}

void print_ledger(std::ostream& out, const LinkSource& link) {
  if (const auto* s = std::get_if<Scenario>(&link)) {
    const LinkBudget budget = link_budget(*s);
    out << "link budget (" << (s->is_monostatic() ? "mono-static" : "bi-static") << ")\n";
    for (std::size_t i = 0; i < budget.entries.size(); ++i) {
      const auto& e = budget.entries[i];
      const double v = e.contribution.value();
      line(out, e.label, i == 0 ? fixed(v, 3) + " dBm" : (v >= 0 ? "+" : "") + fixed(v, 3) + " dB");
    }
    line(out, "received power", fixed(budget.received_power_dbm.value(), 3) + " dBm");
  } else if (const auto* a = std::get_if<AmbientScenario>(&link)) {
    out << "link budget (ambient, single hop)\n";
    if (const auto* e = std::get_if<FieldStrengthDbuV>(&a->level)) {
      line(out, "ambient field strength", fixed(e->value(), 2) + " dBuV/m");
    }
    line(out, "device input power [dBm]", fixed(dbm_from_watts(device_input_power(*a)).value(), 3) + " dBm");
    line(out, "backscatter efficiency", fixed(db_from_linear(a->device.efficiency.value()).value(), 3) + " dB");
    line(out, "device antenna gain (reflected)", fixed(a->device.gain.value(), 3) + " dB");
    line(out, "receiver antenna gain", fixed(a->receiver.gain.value(), 3) + " dB");
    line(out, "path loss device->receiver",
         fixed(-free_space_path_loss(a->r_rx, a->carrier_frequency).value(), 3) + " dB");
    line(out, "received power", fixed(dbm_from_watts(ambient_received_power(*a)).value(), 3) + " dBm");
  } else {
    const auto& f = std::get<FixedReceivedPower>(link);
    out << "link budget (fixed received power)\n";
    line(out, "received power", fixed(dbm_from_watts(f.p_rx).value(), 3) + " dBm");
  }
}

std::vector<Violation> check_profile(const ScenarioConfig& config) {
  if (!config.profile_id) return {};
  const auto* s = std::get_if<Scenario>(&config.link);
  if (s == nullptr) {
    throw ConfigurationError("regulatory profiles apply to dedicated-carrier scenarios only");
  }
  return validate(*s, *find_profile(*config.profile_id));
}

std::string describe(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::kEirpExceeded:
      return "EirpExceeded: EIRP " + fixed(dbm_from_watts(PowerWatts{v.measured}).value(), 2) + " dBm > limit " +
             fixed(dbm_from_watts(PowerWatts{v.limit}).value(), 2) + " dBm";
    case ViolationKind::kBandwidthExceeded:
      return "BandwidthExceeded: " + (std::isfinite(v.measured) ? format_hz(v.measured) : std::string("inf")) +
             " > " + format_hz(v.limit);
    case ViolationKind::kFrequencyOutOfBand:
      return "FrequencyOutOfBand: " + format_hz(v.measured) + " beyond band edge " + format_hz(v.limit);
  }
  return "?";
}

// Applies the EIRP cap requested by the config to a dedicated-carrier link.
LinkSource effective_link(const ScenarioConfig& config) {
  if (config.cap_to_profile) {
    if (const auto* s = std::get_if<Scenario>(&config.link)) {
      return cap_carrier_power(*s, *find_profile(*config.profile_id));
    }
  }
  return config.link;
}

int analyze(const Options& opt, std::ostream& out) {
  const ScenarioConfig config = load_config(opt.config_path);
  const LinkSource link = effective_link(config);
  const CapacityResult c = evaluate_link(link, config.noise);
  const std::optional<BandwidthHz> w = std::visit([](const auto& l) { return l.bandwidth; }, link);
  const double n0_dbm = dbm_from_watts(PowerWatts{config.noise.density_w_per_hz()}).value();
  const double w_star = transition_bandwidth(c.received_power, config.noise).value();
  const double p_rx_dbm = dbm_from_watts(c.received_power).value();

  std::vector<Violation> violations;
  if (config.profile_id) {
    const auto* s = std::get_if<Scenario>(&link);
    if (s == nullptr) throw ConfigurationError("regulatory profiles apply to dedicated-carrier scenarios only");
    violations = validate(*s, *find_profile(*config.profile_id));
  }

  if (!opt.quiet) {
    out << "scenario: " << opt.config_path << "\n\n";
    print_ledger(out, link);
    out << "\ncapacity\n";
    line(out, "noise density (N0*F)", fixed(n0_dbm, 3) + " dBm/Hz");
    line(out, "bandwidth W", w ? format_hz(w->value()) : "inf");
    if (c.snr_linear) line(out, "SNR", fixed(10.0 * std::log10(*c.snr_linear), 3) + " dB");
    line(out, "absolute bound C_inf", format_bps(c.c_infinity.value()));
    if (c.c_bandwidth) line(out, "bandwidth-limited bound C_W", format_bps(c.c_bandwidth->value()));
    if (c.regime) line(out, "regime", std::string(to_string(*c.regime)));
    line(out, "transition bandwidth W*", format_hz(w_star));
    if (config.profile_id) {
      out << "\nregulatory profile " << *config.profile_id << (config.cap_to_profile ? " (P_C capped)" : "") << ": "
          << (violations.empty() ? "compliant" : "violations") << '\n';
      for (const auto& v : violations) out << "  " << describe(v) << '\n';
    }
    out << '\n';
  }

  out << "[result]\n";
  out << "p_rx_dbm=" << format_number(p_rx_dbm) << '\n';
  if (c.snr_linear) out << "snr_db=" << format_number(10.0 * std::log10(*c.snr_linear)) << '\n';
  out << "c_inf_bps=" << format_number(c.c_infinity.value()) << '\n';
  if (c.c_bandwidth) out << "c_w_bps=" << format_number(c.c_bandwidth->value()) << '\n';
  if (c.regime) out << "regime=" << to_string(*c.regime) << '\n';
  out << "w_star_hz=" << format_number(w_star) << '\n';
  if (config.profile_id) {
    out << "violations=";
    for (std::size_t i = 0; i < violations.size(); ++i) out << (i ? ";" : "") << to_string(violations[i].kind);
    out << '\n';
  }

  return (opt.strict && !violations.empty()) ? kExitViolation : kExitOk;
}

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << contents;
  f.flush();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

int sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  const ScenarioConfig config = load_config(opt.config_path);
  if (!config.sweep) {
    err << "error: config has no sweep block (sweep.parameter, sweep.start, sweep.stop, sweep.points)\n";
    return kExitError;
  }
  const std::vector<Violation> violations = check_profile(config);
  const SweepSpec spec = config.sweep_spec();
  const bool finite = has_finite_bandwidth(spec);

  std::ostringstream csv;
  csv << sweep_header(spec.parameter, finite) << '\n';
  write_sweep_rows(csv, sweep_parallel(spec), finite);
  if (!write_file(opt.out_path, csv.str(), err)) return kExitError;

  if (opt.audit) {
    const auto bad = audit_sweep_csv(spec, csv.str());
    if (!bad.empty()) {
      err << "error: audit failed on " << bad.size() << " row(s), first is row " << bad.front() << '\n';
      return kExitError;
    }
  }
  if (!opt.quiet) {
    out << "wrote " << spec.values.size() << " rows to " << opt.out_path << (opt.audit ? " (audit ok)" : "") << '\n';
    for (const auto& v : violations) out << "regulatory: " << describe(v) << '\n';
  }
  return (opt.strict && !violations.empty()) ? kExitViolation : kExitOk;
}

int figure(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto csv = render_figure(opt.preset);
  if (!csv) {
    err << "error: unknown figure preset '" << opt.preset << "'; available:";
    for (auto name : figure_names()) err << ' ' << name;
    err << '\n';
    return kExitError;
  }
  if (!write_file(opt.out_path, *csv, err)) return kExitError;
  if (!opt.quiet) out << "wrote " << opt.preset << " to " << opt.out_path << '\n';
  return kExitOk;
}

int profiles(std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-15s %-6s %-10s %-10s %-24s %s\n", "id", "region", "center", "bandwidth",
                "limit", "effective EIRP");
  out << buf;
  for (const auto& p : builtin_profiles()) {
    std::string limit;
    if (const auto* l = std::get_if<EirpLimit>(&p.limit)) {
      limit = "EIRP " + format_number(l->power.value()) + " W";
    } else if (const auto* l = std::get_if<ErpLimit>(&p.limit)) {
      limit = "ERP " + format_number(l->power.value()) + " W";
    } else {
      const auto& c = std::get<ConductedPlusGainLimit>(p.limit);
      limit = format_number(c.power.value()) + " W + " + format_number(c.max_gain.value()) + " dBi";
    }
    const PowerWatts eirp = effective_eirp_limit(p);
    char eirp_buf[64];
    std::snprintf(eirp_buf, sizeof eirp_buf, "%.4g W (%.2f dBm)", eirp.value(), dbm_from_watts(eirp).value());
    std::snprintf(buf, sizeof buf, "%-15s %-6s %-10s %-10s %-24s %s\n", p.id.c_str(), p.region.c_str(),
                  format_hz(p.center_frequency.value()).c_str(), format_hz(p.max_bandwidth.value()).c_str(),
                  limit.c_str(), eirp_buf);
    out << buf;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Backscatter link budget and Shannon capacity bounds", "bscap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--strict", opt.strict, "Exit with code 2 when a regulatory profile is violated");
  app.add_flag("--quiet", opt.quiet, "Print only machine-readable output");

  auto* analyze_cmd = app.add_subcommand("analyze", "Link budget and capacity bounds for one scenario file");
  analyze_cmd->add_option("config", opt.config_path, "Scenario file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate the sweep block of a scenario file as CSV");
  sweep_cmd->add_option("config", opt.config_path, "Scenario file with a sweep block")->required();
  sweep_cmd->add_option("--out", opt.out_path, "Output CSV path")->required();
  sweep_cmd->add_flag("--audit", opt.audit, "Re-check every written row against the forward model");

  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV behind a named figure preset");
  figure_cmd->add_option("preset", opt.preset, "fig3..fig9 or table1")->required();
  figure_cmd->add_option("--out", opt.out_path, "Output CSV path")->required();

  auto* profiles_cmd = app.add_subcommand("profiles", "List built-in regulatory band profiles");

  // CLI11 wants argv order reversed for its vector overload.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(opt, out);
    if (sweep_cmd->parsed()) return sweep(opt, out, err);
    if (figure_cmd->parsed()) return figure(opt, out, err);
    if (profiles_cmd->parsed()) return profiles(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace bscap::cli
