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

#include "bscap/sweep.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace bscap {
namespace {

struct ParameterInfo {
  SweepParameter parameter;
  std::string_view name;
  std::string_view column;
};

constexpr std::array<ParameterInfo, 9> kParameters{{
    {SweepParameter::kR, "R", "R_m"},
    {SweepParameter::kRc, "R_C", "R_C_m"},
    {SweepParameter::kRrx, "R_RX", "R_RX_m"},
    {SweepParameter::kCarrierPower, "P_C", "P_C_dBm"},
    {SweepParameter::kFrequency, "f_c", "f_c_Hz"},
    {SweepParameter::kBandwidth, "W", "W_Hz"},
    {SweepParameter::kGain, "G", "G_dBi"},
    {SweepParameter::kSnr, "SNR", "SNR_dB"},
    {SweepParameter::kField, "E_field", "E_field_dBuV_per_m"},
}};

const ParameterInfo& info(SweepParameter p) {
  for (const auto& i : kParameters) {
    if (i.parameter == p) return i;
  }
  return kParameters.front();
}

std::optional<BandwidthHz> bandwidth_of(const LinkSource& link) {
  return std::visit([](const auto& l) { return l.bandwidth; }, link);
}

[[noreturn]] void not_applicable(SweepParameter p, std::string_view what) {
  throw ConfigurationError("sweep parameter " + std::string(parameter_name(p)) + " does not apply to " +
                           std::string(what));
}

void apply_to(Scenario& s, SweepParameter p, double v) {
  switch (p) {
    case SweepParameter::kR:
      if (!s.is_monostatic()) not_applicable(p, "a bi-static scenario");
      std::get<Monostatic>(s.geometry).r = DistanceMeters{v};
      return;
    case SweepParameter::kRc:
      if (s.is_monostatic()) not_applicable(p, "a mono-static scenario");
      std::get<Bistatic>(s.geometry).r_c = DistanceMeters{v};
      return;
    case SweepParameter::kRrx:
      if (s.is_monostatic()) not_applicable(p, "a mono-static scenario");
      std::get<Bistatic>(s.geometry).r_rx = DistanceMeters{v};
      return;
    case SweepParameter::kCarrierPower:
      s.source.power = watts_from_dbm(PowerDbm{v});
      return;
    case SweepParameter::kFrequency:
      s.carrier_frequency = FrequencyHz{v};
      return;
    case SweepParameter::kBandwidth:
      s.bandwidth = BandwidthHz{v};
      return;
    case SweepParameter::kGain:
      s.source.gain = GainDbi{v};
      s.receiver.gain = GainDbi{v};
      return;
    case SweepParameter::kSnr:
    case SweepParameter::kField:
      break;
  }
  not_applicable(p, "a dedicated-carrier scenario");
}

void apply_to(AmbientScenario& a, SweepParameter p, double v) {
  switch (p) {
    case SweepParameter::kRrx:
      a.r_rx = DistanceMeters{v};
      return;
    case SweepParameter::kFrequency:
      a.carrier_frequency = FrequencyHz{v};
      return;
    case SweepParameter::kBandwidth:
      a.bandwidth = BandwidthHz{v};
      return;
    case SweepParameter::kGain:
      a.receiver.gain = GainDbi{v};
      return;
    case SweepParameter::kField:
      a.level = FieldStrengthDbuV{v};
      return;
    default:
      break;
  }
  not_applicable(p, "an ambient scenario");
}

void apply_to(FixedReceivedPower& f, SweepParameter p, double v) {
  if (p != SweepParameter::kBandwidth) not_applicable(p, "a fixed received power");
  f.bandwidth = BandwidthHz{v};
}

PowerWatts link_power(const LinkSource& link) {
  struct Visitor {
    PowerWatts operator()(const Scenario& s) const { return received_power(s); }
    PowerWatts operator()(const AmbientScenario& a) const { return ambient_received_power(a); }
    PowerWatts operator()(const FixedReceivedPower& f) const { return f.p_rx; }
  };
  return std::visit(Visitor{}, link);
}

}  // namespace

std::string_view parameter_name(SweepParameter p) { return info(p).name; }

std::string_view parameter_column(SweepParameter p) { return info(p).column; }

std::optional<SweepParameter> parse_parameter(std::string_view name) {
  for (const auto& i : kParameters) {
    if (i.name == name) return i.parameter;
  }
  return std::nullopt;
}

std::vector<double> sweep_values(double start, double stop, int points, Spacing spacing) {
  if (points < 2) throw DomainError("a sweep needs at least 2 points");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw DomainError("sweep bounds must be finite with start < stop");
  }
  if (spacing == Spacing::kLog && start <= 0.0) {
    throw DomainError("log-spaced sweep needs start > 0");
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  const double n = points - 1;
  if (spacing == Spacing::kLinear) {
    for (int i = 0; i < points; ++i) out[i] = start + (stop - start) * (i / n);
  } else {
    const double lo = std::log10(start);
    const double hi = std::log10(stop);
    for (int i = 0; i < points; ++i) out[i] = std::pow(10.0, lo + (hi - lo) * (i / n));
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

void check_applicable(const LinkSource& base, SweepParameter parameter) {
  if (parameter == SweepParameter::kSnr) {
    if (!bandwidth_of(base)) {
      throw ConfigurationError("an SNR sweep needs a finite bandwidth");
    }
    return;
  }
  // Apply a harmless probe value (1.0 is valid for every parameter unit).
  LinkSource probe = base;
  std::visit([&](auto& l) { apply_to(l, parameter, 1.0); }, probe);
}

bool has_finite_bandwidth(const SweepSpec& spec) {
  return spec.parameter == SweepParameter::kBandwidth || bandwidth_of(spec.base).has_value();
}

LinkSource apply_parameter(const LinkSource& base, SweepParameter parameter, double value, const NoiseModel& noise,
                           const BandProfile* eirp_cap) {
  LinkSource link = base;
  if (parameter == SweepParameter::kSnr) {
    const auto w = bandwidth_of(base);
    if (!w) throw ConfigurationError("an SNR sweep needs a finite bandwidth");
    const double snr_linear = linear_from_db(Decibel{value});
    link = FixedReceivedPower{PowerWatts{snr_linear * noise.density_w_per_hz() * w->value()}, w};
  } else {
    std::visit([&](auto& l) { apply_to(l, parameter, value); }, link);
  }
  if (eirp_cap != nullptr) {
    if (auto* s = std::get_if<Scenario>(&link)) *s = cap_carrier_power(*s, *eirp_cap);
  }
  return link;
}

CapacityResult evaluate_link(const LinkSource& link, const NoiseModel& noise) {
  return capacity_from_power(link_power(link), noise, bandwidth_of(link));
}

SweepRow evaluate_point(const SweepSpec& spec, double value) {
  const LinkSource link = apply_parameter(spec.base, spec.parameter, value, spec.noise, spec.eirp_cap);
  const CapacityResult c = evaluate_link(link, spec.noise);

  SweepRow row;
  row.x = value;
  row.p_rx_dbm = dbm_from_watts(c.received_power).value();
  row.c_inf_bps = c.c_infinity.value();
  if (c.c_bandwidth) {
    row.snr_db = 10.0 * std::log10(*c.snr_linear);
    row.c_w_bps = c.c_bandwidth->value();
    row.regime = c.regime;
  }
  return row;
}

std::vector<SweepRow> sweep_serial(const SweepSpec& spec) {
  check_applicable(spec.base, spec.parameter);
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());
  for (double v : spec.values) rows.push_back(evaluate_point(spec, v));
  return rows;
}

}  // namespace bscap
