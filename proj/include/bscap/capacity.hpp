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

// Shannon bounds on the backscatter data rate.
//
// Two bounds are computed from the received power:
//   * the absolute bound C_inf = P_RX / (N0 * F * ln 2), valid for infinite
//     bandwidth, where Eb/N0 sits exactly at the ln 2 Shannon limit;
//   * the bandwidth-limited bound C_W = W * log2(1 + SNR).
// C_W < C_inf for every finite W and C_W -> C_inf as W grows. The
// transition bandwidth W* = P_RX / (N0 * F) is where SNR = 0 dB.

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "bscap/linkmodel.hpp"
#include "bscap/units.hpp"

namespace bscap {

/// Thermal noise spectral density used throughout, dBm/Hz.
inline constexpr double kDefaultNoiseDensityDbmPerHz = -174.0;

/// Boltzmann constant, J/K.
inline constexpr double kBoltzmann = 1.380649e-23;

/// Receiver noise: one-sided thermal density N0_th (dBm/Hz) and noise figure F.
struct NoiseModel {
  double n0_thermal_dbm_per_hz = kDefaultNoiseDensityDbmPerHz;
  Decibel noise_figure{0.0};

  /// N0 = N0_th * F in W/Hz. Throws DomainError for a negative noise figure.
  double density_w_per_hz() const;

  /// N0_th derived from k*T instead of the fixed -174 dBm/Hz.
  static NoiseModel thermal(TemperatureKelvin t, Decibel noise_figure);

  /// Fixed -174 dBm/Hz density with the scenario receiver's noise figure.
  static NoiseModel for_receiver(const Receiver& rx);
};

enum class Regime { kPowerLimited, kBandwidthLimited };

std::string_view to_string(Regime r);

/// SNR < 1 is power limited; SNR >= 1 is bandwidth limited.
Regime regime_for_snr(double snr_linear);

struct CapacityResult {
  PowerWatts received_power;
  DataRateBps c_infinity;
  // The following are present only for finite bandwidth.
  std::optional<DataRateBps> c_bandwidth;
  std::optional<double> snr_linear;
  std::optional<Regime> regime;
};

double snr(PowerWatts p_rx, const NoiseModel& noise, std::optional<BandwidthHz> w);
double eb_n0(PowerWatts p_rx, DataRateBps rate, const NoiseModel& noise);

DataRateBps absolute_bound(PowerWatts p_rx, const NoiseModel& noise);
DataRateBps bandwidth_limited_bound(PowerWatts p_rx, const NoiseModel& noise, BandwidthHz w);

/// Bounds for an already known received power.
CapacityResult capacity_from_power(PowerWatts p_rx, const NoiseModel& noise, std::optional<BandwidthHz> w);

CapacityResult capacity(const Scenario& s, const NoiseModel& noise);
/// Uses NoiseModel::for_receiver(s.receiver).
CapacityResult capacity(const Scenario& s);

BandwidthHz transition_bandwidth(PowerWatts p_rx, const NoiseModel& noise);

/// Received power needed to reach `target` at bandwidth `w` (infinite if empty).
PowerWatts required_received_power(DataRateBps target, const NoiseModel& noise, std::optional<BandwidthHz> w);

/// Which distance a bi-static range solve varies. Mono-static always solves R.
enum class FreeDistance { kSourceToDevice, kDeviceToReceiver };

/// Distance at which capacity(s) reaches `target`; every other scenario field
/// (including the fixed bi-static distance) is taken from `s`.
DistanceMeters solve_range_for_rate(DataRateBps target, const Scenario& s, const NoiseModel& noise,
                                    FreeDistance free = FreeDistance::kDeviceToReceiver);

/// Carrier power at which capacity(s) reaches `target`; s.source.power is ignored.
PowerWatts solve_carrier_power_for_rate(DataRateBps target, const Scenario& s, const NoiseModel& noise);

struct UptimeBudget {
  double bits_per_burst;
  std::optional<double> average_bps;
};

/// Bits transferable while the carrier is on for `uptime_s` seconds, using
/// C_W for finite bandwidth and C_inf otherwise. With a period, also the
/// long-run average rate.
UptimeBudget uptime_bits(const Scenario& s, const NoiseModel& noise, double uptime_s,
                         std::optional<double> period_s = std::nullopt);
UptimeBudget uptime_bits(DataRateBps rate, double uptime_s, std::optional<double> period_s = std::nullopt);

/// Carrier on-air pattern of a periodic ambient transmission.
struct UptimePreset {
  std::string_view id;
  double uptime_s;
  double period_s;
};

/// WiFi beacon (1 ms / 100 ms), LTE reference signals (130 us / 5 ms),
/// 5G SSB (285 us / 20 ms).
std::span<const UptimePreset> uptime_presets();

}  // namespace bscap
