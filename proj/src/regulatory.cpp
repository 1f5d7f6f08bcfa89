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

#include "bscap/regulatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bscap {
namespace {

// Tolerance when comparing EIRP against a limit, in dB.
constexpr double kEirpToleranceDb = 1e-9;

const std::vector<BandProfile>& profiles() {
  static const std::vector<BandProfile> kProfiles = [] {
    const ConductedPlusGainLimit fcc{PowerWatts{1.0}, GainDbi{6.0}};
    return std::vector<BandProfile>{
        {"FCC_915", "US", FrequencyHz{915e6}, BandwidthHz{26e6}, fcc, "FCC 15.247; 1 W conducted, up to 6 dBi"},
        {"FCC_2400", "US", FrequencyHz{2.4e9}, BandwidthHz{83.5e6}, fcc, "FCC 15.247; 1 W conducted, up to 6 dBi"},
        {"FCC_5800", "US", FrequencyHz{5.8e9}, BandwidthHz{125e6}, fcc, "FCC 15.247; 1 W conducted, up to 6 dBi"},
        {"ETSI_868_LOWER", "EU", FrequencyHz{868e6}, BandwidthHz{200e3}, ErpLimit{PowerWatts{2.0}},
         "ETSI EN 302 208 lower band"},
        {"ETSI_915_UPPER", "EU", FrequencyHz{915e6}, BandwidthHz{400e3}, ErpLimit{PowerWatts{2.0}},
         "ETSI EN 302 208 upper band; few countries only"},
        {"ETSI_2400", "EU", FrequencyHz{2.4e9}, BandwidthHz{8e6}, EirpLimit{PowerWatts{0.5}},
         "ETSI EN 300 440; 4 W EIRP allowed for fixed indoor installations only"},
    };
  }();
  return kProfiles;
}

}  // namespace

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kEirpExceeded:
      return "EirpExceeded";
    case ViolationKind::kBandwidthExceeded:
      return "BandwidthExceeded";
    case ViolationKind::kFrequencyOutOfBand:
      return "FrequencyOutOfBand";
  }
  return "?";
}

std::span<const BandProfile> builtin_profiles() { return profiles(); }

const BandProfile* find_profile(std::string_view id) {
  const auto& all = profiles();
  const auto it = std::find_if(all.begin(), all.end(), [&](const BandProfile& p) { return p.id == id; });
  return it == all.end() ? nullptr : &*it;
}

PowerWatts effective_eirp_limit(const BandProfile& p) {
  struct Visitor {
    PowerWatts operator()(const EirpLimit& l) const { return l.power; }
    PowerWatts operator()(const ErpLimit& l) const { return eirp_from_erp(l.power); }
    PowerWatts operator()(const ConductedPlusGainLimit& l) const {
      return PowerWatts{l.power.value() * linear_gain(l.max_gain)};
    }
  };
  return std::visit(Visitor{}, p.limit);
}

std::vector<Violation> validate(const Scenario& s, const BandProfile& p) {
  std::vector<Violation> out;

  const double eirp = s.source.power.value() * linear_gain(s.source.gain);
  const double limit = effective_eirp_limit(p).value();
  if (10.0 * std::log10(eirp / limit) > kEirpToleranceDb) {
    out.push_back({ViolationKind::kEirpExceeded, eirp, limit});
  }

  const double max_bw = p.max_bandwidth.value();
  const double bw = s.bandwidth ? s.bandwidth->value() : std::numeric_limits<double>::infinity();
  if (bw > max_bw) {
    out.push_back({ViolationKind::kBandwidthExceeded, bw, max_bw});
  }

  const double f = s.carrier_frequency.value();
  const double lo = p.center_frequency.value() - max_bw / 2.0;
  const double hi = p.center_frequency.value() + max_bw / 2.0;
  if (f < lo) {
    out.push_back({ViolationKind::kFrequencyOutOfBand, f, lo});
  } else if (f > hi) {
    out.push_back({ViolationKind::kFrequencyOutOfBand, f, hi});
  }
  return out;
}

Scenario cap_carrier_power(const Scenario& s, const BandProfile& p) {
  const double allowed = effective_eirp_limit(p).value() / linear_gain(s.source.gain);
  Scenario capped = s;
  if (allowed < s.source.power.value()) {
    capped.source.power = PowerWatts{allowed};
  }
  return capped;
}

}  // namespace bscap
