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

// Ambient backscatter: the carrier is a broadcast signal already present at
// the device, so only the device -> receiver hop is modeled.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "bscap/capacity.hpp"
#include "bscap/linkmodel.hpp"
#include "bscap/units.hpp"

namespace bscap {

/// Ambient level at the device: either a field strength or the power at the
/// device antenna output. Efficiency is applied once, on reflection.
using AmbientLevel = std::variant<FieldStrengthDbuV, PowerWatts>;

struct AmbientScenario {
  AmbientLevel level;
  BackscatterDevice device;
  Receiver receiver;
  DistanceMeters r_rx;
  FrequencyHz carrier_frequency;
  std::optional<BandwidthHz> bandwidth;
};

/// Power at the output of an antenna of gain `g` in a plane wave of field
/// strength `e`, via the effective aperture G*lambda^2/(4*pi) and Z0 = 120*pi.
PowerWatts power_from_field(FieldStrengthDbuV e, GainDbi g, FrequencyHz f);

/// Power at the device antenna output for `a`.
PowerWatts device_input_power(const AmbientScenario& a);

PowerWatts ambient_received_power(const AmbientScenario& a);

CapacityResult ambient_capacity(const AmbientScenario& a, const NoiseModel& noise);

struct AmbientPreset {
  std::string_view id;
  AmbientLevel level;
  FrequencyHz carrier_frequency;
};

/// DAB_RURAL_90 (38.64 dBuV/m at 200 MHz) and device power levels
/// AMBIENT_90/80/70 (-90/-80/-70 dBm at 200 MHz).
std::span<const AmbientPreset> ambient_presets();

const AmbientPreset* find_ambient_preset(std::string_view id);

}  // namespace bscap
