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

// Parameter sweeps. Every point is independent, so the sweep has two
// kernels: sweep_serial() is the reference, sweep_parallel() splits points
// across OpenMP threads. Both write row i from value i only, and must give
// bit-identical rows.

#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bscap/ambient.hpp"
#include "bscap/capacity.hpp"
#include "bscap/linkmodel.hpp"
#include "bscap/regulatory.hpp"

namespace bscap {

/// A link whose received power is given directly (used for SNR and
/// bandwidth plots that are independent of geometry).
struct FixedReceivedPower {
  PowerWatts p_rx;
  std::optional<BandwidthHz> bandwidth;
};

using LinkSource = std::variant<Scenario, AmbientScenario, FixedReceivedPower>;

enum class SweepParameter { kR, kRc, kRrx, kCarrierPower, kFrequency, kBandwidth, kGain, kSnr, kField };

/// Config spelling: R, R_C, R_RX, P_C, f_c, W, G, SNR, E_field.
std::string_view parameter_name(SweepParameter p);
std::optional<SweepParameter> parse_parameter(std::string_view name);

/// CSV column header for the swept value, including its unit (e.g. "R_m").
std::string_view parameter_column(SweepParameter p);

enum class Spacing { kLinear, kLog };

/// `points` values from `start` to `stop` inclusive. Log spacing needs start > 0.
std::vector<double> sweep_values(double start, double stop, int points, Spacing spacing);

/// Swept values are in the parameter's column unit: metres, dBm for P_C, Hz
/// for f_c and W, dBi for G, dB for SNR, dBuV/m for E_field.
struct SweepSpec {
  LinkSource base;
  NoiseModel noise;
  SweepParameter parameter = SweepParameter::kR;
  std::vector<double> values;
  /// When set, P_C is capped to this profile's EIRP limit at every point.
  const BandProfile* eirp_cap = nullptr;
};

struct SweepRow {
  double x = 0.0;
  double p_rx_dbm = 0.0;
  double c_inf_bps = 0.0;
  std::optional<double> snr_db;
  std::optional<double> c_w_bps;
  std::optional<Regime> regime;
};

/// Throws ConfigurationError when `parameter` does not apply to `base`.
void check_applicable(const LinkSource& base, SweepParameter parameter);

/// Whether rows of this spec carry the finite-bandwidth columns.
bool has_finite_bandwidth(const SweepSpec& spec);

/// Applies `value` to a copy of `base` (and the cap, if any).
LinkSource apply_parameter(const LinkSource& base, SweepParameter parameter, double value, const NoiseModel& noise,
                           const BandProfile* eirp_cap = nullptr);

/// Bounds of one fully specified link.
CapacityResult evaluate_link(const LinkSource& link, const NoiseModel& noise);

SweepRow evaluate_point(const SweepSpec& spec, double value);

std::vector<SweepRow> sweep_serial(const SweepSpec& spec);
std::vector<SweepRow> sweep_parallel(const SweepSpec& spec);

}  // namespace bscap
