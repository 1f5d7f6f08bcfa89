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

// Scenario files: flat `key = value` lines with dotted section keys, `#`
// comments, and a mandatory `schema = 1`. Dimensioned values always carry a
// unit suffix ("28 dBm", "0.63 W", "915 MHz", "10 m"); bare numbers are
// rejected except for dimensionless fields. See README.md for the key list.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bscap/capacity.hpp"
#include "bscap/sweep.hpp"

namespace bscap {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepBlock {
  SweepParameter parameter;
  double start;
  double stop;
  int points;
  Spacing spacing;
};

struct ScenarioConfig {
  LinkSource link;
  NoiseModel noise;
  std::optional<std::string> profile_id;
  bool cap_to_profile = false;
  std::optional<SweepBlock> sweep;

  /// Builds the sweep described by the `sweep.*` block. Throws ParseError if absent.
  SweepSpec sweep_spec() const;
};

/// Parses a scenario document. Throws ParseError (with the line number where
/// one applies) for syntax errors, unknown keys, missing keys, bad units, and
/// any quantity or scenario invariant violation.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

// Value parsers, exposed for reuse and tests. Each throws ParseError.
PowerWatts parse_power(std::string_view v);
GainDbi parse_gain(std::string_view v);
Decibel parse_decibel(std::string_view v);
FrequencyHz parse_frequency(std::string_view v);
std::optional<BandwidthHz> parse_bandwidth(std::string_view v);
DistanceMeters parse_distance(std::string_view v);

}  // namespace bscap
