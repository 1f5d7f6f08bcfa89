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

// License-exempt band profiles (FCC 15.247, ETSI EN 302 208, ETSI EN 300 440)
// and EIRP checks for dedicated-carrier scenarios.
//
// Band edges are approximated as center +/- bandwidth/2; the real edges in
// the regulations may differ slightly.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bscap/linkmodel.hpp"
#include "bscap/units.hpp"

namespace bscap {

struct EirpLimit {
  PowerWatts power;
};
struct ErpLimit {
  PowerWatts power;
};
/// Conducted power limit valid up to a maximum antenna gain.
struct ConductedPlusGainLimit {
  PowerWatts power;
  GainDbi max_gain;
};

using PowerLimit = std::variant<EirpLimit, ErpLimit, ConductedPlusGainLimit>;

struct BandProfile {
  std::string id;
  std::string region;
  FrequencyHz center_frequency;
  BandwidthHz max_bandwidth;
  PowerLimit limit;
  std::string notes;
};

enum class ViolationKind { kEirpExceeded, kBandwidthExceeded, kFrequencyOutOfBand };

std::string_view to_string(ViolationKind k);

/// A breached limit. Powers are in watts, bandwidths and frequencies in Hz.
/// For out-of-band frequencies `limit` is the band edge that was crossed.
struct Violation {
  ViolationKind kind;
  double measured;
  double limit;
};

/// The six built-in profiles in a stable order.
std::span<const BandProfile> builtin_profiles();

/// Looks up a built-in profile by id; nullptr if unknown.
const BandProfile* find_profile(std::string_view id);

PowerWatts effective_eirp_limit(const BandProfile& p);

std::vector<Violation> validate(const Scenario& s, const BandProfile& p);

/// Lowers the carrier power so that P_C * G_C meets the EIRP limit. Never
/// raises P_C and never touches antenna gains.
Scenario cap_carrier_power(const Scenario& s, const BandProfile& p);

}  // namespace bscap
