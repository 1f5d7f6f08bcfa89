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

// Free-space link model for backscatter: the carrier hop to the device and
// the reflected hop to the receiver, for mono-static and bi-static setups.
//
// The model is pure far-field Friis for every R > 0. Results for distances
// below roughly one wavelength are not physical.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bscap/units.hpp"

namespace bscap {

struct CarrierSource {
  PowerWatts power;
  GainDbi gain;
};

struct BackscatterDevice {
  GainDbi gain;
  Efficiency efficiency;
};

/// Receiver front end. The noise figure must be >= 0 dB.
struct Receiver {
  GainDbi gain;
  Decibel noise_figure{0.0};
};

/// Source and receiver share one antenna at distance `r` from the device.
struct Monostatic {
  DistanceMeters r;
};

/// Separate source (at `r_c`) and receiver (at `r_rx`) antennas.
struct Bistatic {
  DistanceMeters r_c;
  DistanceMeters r_rx;
};

using Geometry = std::variant<Monostatic, Bistatic>;

/// One backscatter link. `bandwidth` is empty for infinite bandwidth.
///
/// For a mono-static geometry the source and receiver gains describe the
/// same antenna and must be equal; validate() rejects anything else.
struct Scenario {
  CarrierSource source;
  BackscatterDevice device;
  Receiver receiver;
  Geometry geometry;
  FrequencyHz carrier_frequency;
  std::optional<BandwidthHz> bandwidth;
  TemperatureKelvin temperature{300.0};

  /// Throws ConfigurationError when the scenario breaks a cross-field invariant.
  void validate() const;

  bool is_monostatic() const { return std::holds_alternative<Monostatic>(geometry); }

  /// Mono-static scenario with one antenna gain `g` used for both roles.
  static Scenario monostatic(PowerWatts carrier_power, GainDbi g, BackscatterDevice device, Decibel noise_figure,
                             DistanceMeters r, FrequencyHz f, std::optional<BandwidthHz> w);
};

struct LinkBudgetEntry {
  std::string label;
  Decibel contribution;
};

/// Itemized dB ledger from the carrier power to the received power. The first
/// entry is the carrier power in dBm; the rest are gains and losses in dB.
struct LinkBudget {
  std::vector<LinkBudgetEntry> entries;
  PowerWatts received_power;
  PowerDbm received_power_dbm;

  /// Sum of all entries, i.e. the received power in dBm as the ledger sees it.
  double total_dbm() const;
};

/// Free-space path loss (4*pi*R*f/c0)^2 in dB.
Decibel free_space_path_loss(DistanceMeters r, FrequencyHz f);

PowerWatts device_received_power(const CarrierSource& source, const BackscatterDevice& device, DistanceMeters r_c,
                                 FrequencyHz f);

PowerWatts bistatic_received_power(const Scenario& s);
PowerWatts monostatic_received_power(const Scenario& s);
PowerWatts received_power(const Scenario& s);

LinkBudget link_budget(const Scenario& s);

}  // namespace bscap
