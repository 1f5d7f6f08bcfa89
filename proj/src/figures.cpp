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

#include "bscap/figures.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "bscap/ambient.hpp"
#include "bscap/capacity.hpp"
#include "bscap/csv.hpp"
#include "bscap/sweep.hpp"

namespace bscap {
namespace {

constexpr std::array<std::string_view, 8> kFigures{"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "table1"};

constexpr int kRangePoints = 61;

struct Labeled {
  std::string_view label;
  double value;
};

std::vector<double> range_axis() { return sweep_values(1.0, 1000.0, kRangePoints, Spacing::kLog); }

NoiseModel ideal_noise() { return NoiseModel{}; }

BackscatterDevice dipole_device(double mu = 1.0) { return BackscatterDevice{GainDbi{2.15}, Efficiency{mu}}; }

// One CSV with a leading series column; all series share the x column.
class SeriesWriter {
 public:
  SeriesWriter(SweepParameter p, bool finite) : finite_(finite) { out_ << sweep_header(p, finite, true) << '\n'; }

  void add(std::string_view label, const SweepSpec& spec) {
    write_sweep_rows(out_, sweep_parallel(spec), finite_, label);
  }

  std::string str() const { return out_.str(); }

 private:
  bool finite_;
  std::ostringstream out_;
};

std::string fig3() {
  SeriesWriter w(SweepParameter::kSnr, true);
  const FixedReceivedPower link{watts_from_dbm(PowerDbm{-100.0}), BandwidthHz{400e3}};
  w.add("W=400kHz", SweepSpec{link, ideal_noise(), SweepParameter::kSnr, sweep_values(-20.0, 60.0, 81, Spacing::kLinear)});
  return w.str();
}

std::string fig4() {
  constexpr std::array<Labeled, 5> levels{{{"P_RX=-120dBm", -120.0},
                                           {"P_RX=-110dBm", -110.0},
                                           {"P_RX=-100dBm", -100.0},
                                           {"P_RX=-90dBm", -90.0},
                                           {"P_RX=-80dBm", -80.0}}};
  SeriesWriter w(SweepParameter::kBandwidth, true);
  for (const auto& [label, dbm] : levels) {
    const FixedReceivedPower link{watts_from_dbm(PowerDbm{dbm}), std::nullopt};
    w.add(label, SweepSpec{link, ideal_noise(), SweepParameter::kBandwidth, sweep_values(1e3, 1e9, 61, Spacing::kLog)});
  }
  return w.str();
}

std::string fig5() {
  constexpr std::array<Labeled, 6> bandwidths{{{"W=200kHz", 200e3},
                                               {"W=400kHz", 400e3},
                                               {"W=8MHz", 8e6},
                                               {"W=26MHz", 26e6},
                                               {"W=83.5MHz", 83.5e6},
                                               {"W=125MHz", 125e6}}};
  SeriesWriter w(SweepParameter::kR, true);
  for (const auto& [label, hz] : bandwidths) {
    w.add(label, SweepSpec{reference_scenario(DistanceMeters{1.0}, BandwidthHz{hz}), ideal_noise(), SweepParameter::kR,
                           range_axis()});
  }
  return w.str();
}

std::string fig6() {
  constexpr std::array<Labeled, 4> powers{
      {{"P_C=8dBm", 8.0}, {"P_C=18dBm", 18.0}, {"P_C=28dBm", 28.0}, {"P_C=38dBm", 38.0}}};
  constexpr std::array<Labeled, 2> bandwidths{{{"W=400kHz", 400e3}, {"W=8MHz", 8e6}}};
  SeriesWriter w(SweepParameter::kR, true);
  for (const auto& [w_label, hz] : bandwidths) {
    for (const auto& [p_label, dbm] : powers) {
      Scenario s = reference_scenario(DistanceMeters{1.0}, BandwidthHz{hz});
      s.source.power = watts_from_dbm(PowerDbm{dbm});
      const std::string label = std::string(p_label) + ";" + std::string(w_label);
      w.add(label, SweepSpec{s, ideal_noise(), SweepParameter::kR, range_axis()});
    }
  }
  return w.str();
}

std::string fig7() {
  constexpr std::array<Labeled, 3> carriers{{{"f_c=915MHz", 915e6}, {"f_c=2.4GHz", 2.4e9}, {"f_c=5.8GHz", 5.8e9}}};
  SeriesWriter w(SweepParameter::kR, true);
  for (const auto& [label, hz] : carriers) {
    Scenario s = reference_scenario(DistanceMeters{1.0}, BandwidthHz{400e3});
    s.carrier_frequency = FrequencyHz{hz};
    w.add(label, SweepSpec{s, ideal_noise(), SweepParameter::kR, range_axis()});
  }
  return w.str();
}

std::string fig8() {
  SeriesWriter w(SweepParameter::kRrx, true);
  for (const auto& preset : ambient_presets()) {
    const AmbientScenario a{preset.level,       dipole_device(),
                            Receiver{GainDbi{8.0}, Decibel{0.0}}, DistanceMeters{1.0},
                            preset.carrier_frequency, BandwidthHz{400e3}};
    w.add(preset.id, SweepSpec{a, ideal_noise(), SweepParameter::kRrx, range_axis()});
  }
  return w.str();
}

std::string fig9() {
  std::ostringstream out;
  out << "series,R_m,uptime_s,period_s,bits_inf,bits_w,avg_bps_inf,avg_bps_w\n";
  const SweepSpec spec{reference_scenario(DistanceMeters{1.0}, BandwidthHz{400e3}), ideal_noise(), SweepParameter::kR,
                       range_axis()};
  const auto rows = sweep_parallel(spec);
  for (const auto& preset : uptime_presets()) {
    for (const auto& r : rows) {
      const UptimeBudget inf = uptime_bits(DataRateBps{r.c_inf_bps}, preset.uptime_s, preset.period_s);
      const UptimeBudget bw = uptime_bits(DataRateBps{*r.c_w_bps}, preset.uptime_s, preset.period_s);
      out << preset.id << ',' << format_number(r.x) << ',' << format_number(preset.uptime_s) << ','
          << format_number(preset.period_s) << ',' << format_number(inf.bits_per_burst) << ','
          << format_number(bw.bits_per_burst) << ',' << format_number(*inf.average_bps) << ','
          << format_number(*bw.average_bps) << '\n';
    }
  }
  return out.str();
}

std::string table1() {
  const SweepSpec spec{rfid_scenario(DistanceMeters{10.0}), NoiseModel{kDefaultNoiseDensityDbmPerHz, Decibel{20.0}},
                       SweepParameter::kR, {10.0, 100.0}};
  std::ostringstream out;
  out << sweep_header(spec.parameter, true) << '\n';
  write_sweep_rows(out, sweep_serial(spec), true);
  return out.str();
}

}  // namespace

Scenario reference_scenario(DistanceMeters r, std::optional<BandwidthHz> w) {
  return Scenario::monostatic(watts_from_dbm(PowerDbm{28.0}), GainDbi{8.0}, dipole_device(), Decibel{0.0}, r,
                              FrequencyHz{900e6}, w);
}

Scenario rfid_scenario(DistanceMeters r) {
  return Scenario::monostatic(watts_from_dbm(PowerDbm{28.0}), GainDbi{8.0}, dipole_device(0.25), Decibel{20.0}, r,
                              FrequencyHz{915e6}, BandwidthHz{26e6});
}

std::span<const std::string_view> figure_names() { return kFigures; }

std::optional<std::string> render_figure(std::string_view name) {
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  if (name == "fig7") return fig7();
  if (name == "fig8") return fig8();
  if (name == "fig9") return fig9();
  if (name == "table1") return table1();
  return std::nullopt;
}

}  // namespace bscap
