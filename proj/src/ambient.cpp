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

#include "bscap/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace bscap {
namespace {

const std::vector<AmbientPreset>& presets() {
  static const std::vector<AmbientPreset> kPresets{
      {"DAB_RURAL_90", FieldStrengthDbuV{38.64}, FrequencyHz{200e6}},
      {"AMBIENT_90", watts_from_dbm(PowerDbm{-90.0}), FrequencyHz{200e6}},
      {"AMBIENT_80", watts_from_dbm(PowerDbm{-80.0}), FrequencyHz{200e6}},
      {"AMBIENT_70", watts_from_dbm(PowerDbm{-70.0}), FrequencyHz{200e6}},
  };
  return kPresets;
}

}  // namespace

PowerWatts power_from_field(FieldStrengthDbuV e, GainDbi g, FrequencyHz f) {
  const double e_v_per_m = std::pow(10.0, e.value() / 20.0) * 1e-6;
  const double power_density = e_v_per_m * e_v_per_m / kFreeSpaceImpedance;
  const double lambda = wavelength(f).value();
  const double aperture = linear_gain(g) * lambda * lambda / (4.0 * std::numbers::pi);
  return PowerWatts{power_density * aperture};
}

PowerWatts device_input_power(const AmbientScenario& a) {
  if (const auto* e = std::get_if<FieldStrengthDbuV>(&a.level)) {
    return power_from_field(*e, a.device.gain, a.carrier_frequency);
  }
  return std::get<PowerWatts>(a.level);
}

PowerWatts ambient_received_power(const AmbientScenario& a) {
  if (a.receiver.noise_figure.value() < 0.0) {
    throw ConfigurationError("receiver noise figure must be >= 0 dB");
  }
  const double k = kSpeedOfLight / (4.0 * std::numbers::pi * a.carrier_frequency.value());
  const double r = a.r_rx.value();
  return PowerWatts{linear_gain(a.receiver.gain) * linear_gain(a.device.gain) * (k * k) / (r * r) *
                    a.device.efficiency.value() * device_input_power(a).value()};
}

CapacityResult ambient_capacity(const AmbientScenario& a, const NoiseModel& noise) {
  return capacity_from_power(ambient_received_power(a), noise, a.bandwidth);
}

std::span<const AmbientPreset> ambient_presets() { return presets(); }

const AmbientPreset* find_ambient_preset(std::string_view id) {
  const auto& all = presets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const AmbientPreset& p) { return p.id == id; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace bscap
