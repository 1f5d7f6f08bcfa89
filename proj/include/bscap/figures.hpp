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

// Named figure presets. Each renders one CSV document.
//
// Reference scenario: mono-static, P_C = 28 dBm, G = 8 dBi, G_device =
// 2.15 dBi, f_c = 900 MHz, mu = 1, F = 0 dB. Axis ranges are chosen to cover
// the span of interest with log spacing; they are not an exact plot grid.
//
//   fig3    C_inf and C_W vs SNR (-20..60 dB, 1 dB steps) at W = 400 kHz
//   fig4    bounds vs W (1 kHz..1 GHz) for P_RX in {-120,-110,-100,-90,-80} dBm
//   fig5    bounds vs R (1..1000 m) for W in {200k, 400k, 8M, 26M, 83.5M, 125M} Hz
//   fig6    bounds vs R for P_C in {8,18,28,38} dBm at W in {400 kHz, 8 MHz}
//   fig7    bounds vs R for f_c in {915 MHz, 2.4 GHz, 5.8 GHz} at W = 400 kHz
//   fig8    ambient bounds vs R_RX at 200 MHz, W = 400 kHz, G_RX = 8 dBi,
//           for DAB_RURAL_90 and AMBIENT_90/80/70
//   fig9    bits per carrier burst vs R for WIFI, LTE and 5G uptime presets
//   table1  UHF-RFID check: mu = 0.25, F = 20 dB, f_c = 915 MHz, W = 26 MHz,
//           R in {10, 100} m

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "bscap/linkmodel.hpp"

namespace bscap {

/// Reference mono-static scenario at distance `r`.
Scenario reference_scenario(DistanceMeters r, std::optional<BandwidthHz> w);

/// Mono-static UHF-RFID reader scenario (mu = 0.25, F = 20 dB, 915 MHz, 26 MHz).
Scenario rfid_scenario(DistanceMeters r);

std::span<const std::string_view> figure_names();

/// CSV text for `name`; nullopt for an unknown preset.
std::optional<std::string> render_figure(std::string_view name);

}  // namespace bscap
