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

#include "bscap/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace bscap {
namespace {

constexpr double kLn2 = std::numbers::ln2;

constexpr std::array<UptimePreset, 3> kUptimePresets{{
    {"WIFI", 1e-3, 100e-3},
    {"LTE", 130e-6, 5e-3},
    {"5G", 285e-6, 20e-3},
}};

void require_nonzero_target(DataRateBps target) {
  if (target.value() <= 0.0) {
    throw DomainError("target data rate must be > 0 bps");
  }
}

// Received power of `s` with one distance forced to 1 m.
PowerWatts power_at_unit_distance(Scenario s, FreeDistance free) {
  if (auto* m = std::get_if<Monostatic>(&s.geometry)) {
    m->r = DistanceMeters{1.0};
  } else {
    auto& b = std::get<Bistatic>(s.geometry);
    (free == FreeDistance::kSourceToDevice ? b.r_c : b.r_rx) = DistanceMeters{1.0};
  }
  return received_power(s);
}

}  // namespace

double NoiseModel::density_w_per_hz() const {
  if (noise_figure.value() < 0.0) {
    throw DomainError("noise figure must be >= 0 dB");
  }
  return watts_from_dbm(PowerDbm{n0_thermal_dbm_per_hz}).value() * linear_from_db(noise_figure);
}

NoiseModel NoiseModel::thermal(TemperatureKelvin t, Decibel noise_figure) {
  return NoiseModel{10.0 * std::log10(kBoltzmann * t.value()) + 30.0, noise_figure};
}

NoiseModel NoiseModel::for_receiver(const Receiver& rx) {
  return NoiseModel{kDefaultNoiseDensityDbmPerHz, rx.noise_figure};
}

std::string_view to_string(Regime r) {
  return r == Regime::kPowerLimited ? "power-limited" : "bandwidth-limited";
}

Regime regime_for_snr(double snr_linear) {
  return snr_linear < 1.0 ? Regime::kPowerLimited : Regime::kBandwidthLimited;
}

double snr(PowerWatts p_rx, const NoiseModel& noise, std::optional<BandwidthHz> w) {
  if (!w) {
    throw DomainError("SNR is undefined for infinite bandwidth");
  }
  return p_rx.value() / (noise.density_w_per_hz() * w->value());
}

double eb_n0(PowerWatts p_rx, DataRateBps rate, const NoiseModel& noise) {
  if (rate.value() <= 0.0) {
    throw DomainError("Eb/N0 requires a data rate > 0");
  }
  return p_rx.value() / (rate.value() * noise.density_w_per_hz());
}

DataRateBps absolute_bound(PowerWatts p_rx, const NoiseModel& noise) {
  return DataRateBps{p_rx.value() / (noise.density_w_per_hz() * kLn2)};
}

DataRateBps bandwidth_limited_bound(PowerWatts p_rx, const NoiseModel& noise, BandwidthHz w) {
  const double x = snr(p_rx, noise, w);
  const double c_w = w.value() * std::log1p(x) / kLn2;
  // log1p(x) <= x holds exactly; only rounding at vanishing SNR could break it.
  return DataRateBps{std::min(c_w, absolute_bound(p_rx, noise).value())};
}

CapacityResult capacity_from_power(PowerWatts p_rx, const NoiseModel& noise, std::optional<BandwidthHz> w) {
  CapacityResult result{p_rx, absolute_bound(p_rx, noise), std::nullopt, std::nullopt, std::nullopt};
  if (w) {
    result.snr_linear = snr(p_rx, noise, w);
    result.c_bandwidth = bandwidth_limited_bound(p_rx, noise, *w);
    result.regime = regime_for_snr(*result.snr_linear);
  }
  return result;
}

CapacityResult capacity(const Scenario& s, const NoiseModel& noise) {
  return capacity_from_power(received_power(s), noise, s.bandwidth);
}

CapacityResult capacity(const Scenario& s) { return capacity(s, NoiseModel::for_receiver(s.receiver)); }

BandwidthHz transition_bandwidth(PowerWatts p_rx, const NoiseModel& noise) {
  return BandwidthHz{p_rx.value() / noise.density_w_per_hz()};
}

PowerWatts required_received_power(DataRateBps target, const NoiseModel& noise, std::optional<BandwidthHz> w) {
  require_nonzero_target(target);
  const double n0 = noise.density_w_per_hz();
  if (!w) {
    return PowerWatts{target.value() * n0 * kLn2};
  }
  // SNR_needed = 2^(r/W) - 1
  const double snr_needed = std::expm1(target.value() / w->value() * kLn2);
  if (!std::isfinite(snr_needed)) {
    throw DomainError("target rate " + std::to_string(target.value()) + " bps needs an SNR beyond double range at W = " +
                      std::to_string(w->value()) + " Hz");
  }
  return PowerWatts{snr_needed * n0 * w->value()};
}

DistanceMeters solve_range_for_rate(DataRateBps target, const Scenario& s, const NoiseModel& noise,
                                    FreeDistance free) {
  const double needed = required_received_power(target, noise, s.bandwidth).value();
  const double ratio = power_at_unit_distance(s, free).value() / needed;
  // Mono-static power falls as R^-4; a single bi-static hop as R^-2.
  return DistanceMeters{s.is_monostatic() ? std::sqrt(std::sqrt(ratio)) : std::sqrt(ratio)};
}

PowerWatts solve_carrier_power_for_rate(DataRateBps target, const Scenario& s, const NoiseModel& noise) {
  const double needed = required_received_power(target, noise, s.bandwidth).value();
  Scenario unit = s;
  unit.source.power = PowerWatts{1.0};
  return PowerWatts{needed / received_power(unit).value()};
}

UptimeBudget uptime_bits(DataRateBps rate, double uptime_s, std::optional<double> period_s) {
  detail::require_positive(uptime_s, "carrier uptime [s]");
  if (period_s && !(std::isfinite(*period_s) && *period_s >= uptime_s)) {
    throw DomainError("carrier period must be >= uptime");
  }
  UptimeBudget budget{rate.value() * uptime_s, std::nullopt};
  if (period_s) budget.average_bps = budget.bits_per_burst / *period_s;
  return budget;
}

UptimeBudget uptime_bits(const Scenario& s, const NoiseModel& noise, double uptime_s, std::optional<double> period_s) {
  const CapacityResult c = capacity(s, noise);
  return uptime_bits(c.c_bandwidth.value_or(c.c_infinity), uptime_s, period_s);
}

std::span<const UptimePreset> uptime_presets() { return kUptimePresets; }

}  // namespace bscap
