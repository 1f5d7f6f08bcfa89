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

#include "bscap/linkmodel.hpp"

#include <cmath>
#include <numbers>

namespace bscap {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// c0 / (4*pi*f); squared, this is the path gain at 1 m.
double wavenumber_factor(FrequencyHz f) { return kSpeedOfLight / (kFourPi * f.value()); }

// Both hops in one expression. The mono-static case routes through here too,
// so the two geometries agree bit for bit when R_C = R_RX and G_C = G_RX.
double two_hop_power(double g_c, double g_rx, double g_dev, double mu, double p_c, double f_factor, double r_c,
                     double r_rx) {
  const double k2 = f_factor * f_factor;
  return g_rx * g_c * (g_dev * g_dev) * (k2 * k2) * mu * p_c / ((r_rx * r_rx) * (r_c * r_c));
}

struct Distances {
  DistanceMeters r_c;
  DistanceMeters r_rx;
};

Distances hop_distances(const Geometry& g) {
  if (const auto* m = std::get_if<Monostatic>(&g)) {
    return {m->r, m->r};
  }
  const auto& b = std::get<Bistatic>(g);
  return {b.r_c, b.r_rx};
}

PowerWatts two_hop(const Scenario& s) {
  const auto d = hop_distances(s.geometry);
  return PowerWatts{two_hop_power(linear_gain(s.source.gain), linear_gain(s.receiver.gain), linear_gain(s.device.gain),
                                  s.device.efficiency.value(), s.source.power.value(),
                                  wavenumber_factor(s.carrier_frequency), d.r_c.value(), d.r_rx.value())};
}

}  // namespace

void Scenario::validate() const {
  if (receiver.noise_figure.value() < 0.0) {
    throw ConfigurationError("receiver noise figure must be >= 0 dB");
  }
  if (is_monostatic() && source.gain != receiver.gain) {
    throw ConfigurationError("mono-static scenario requires equal source and receiver antenna gains (got " +
                             std::to_string(source.gain.value()) + " dBi and " +
                             std::to_string(receiver.gain.value()) + " dBi)");
  }
}

Scenario Scenario::monostatic(PowerWatts carrier_power, GainDbi g, BackscatterDevice device, Decibel noise_figure,
                              DistanceMeters r, FrequencyHz f, std::optional<BandwidthHz> w) {
  return Scenario{CarrierSource{carrier_power, g}, device, Receiver{g, noise_figure}, Monostatic{r}, f, w};
}

double LinkBudget::total_dbm() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.contribution.value();
  return total;
}

Decibel free_space_path_loss(DistanceMeters r, FrequencyHz f) {
  return Decibel{20.0 * std::log10(kFourPi * r.value() * f.value() / kSpeedOfLight)};
}

PowerWatts device_received_power(const CarrierSource& source, const BackscatterDevice& device, DistanceMeters r_c,
                                 FrequencyHz f) {
  const double k = wavenumber_factor(f);
  const double r = r_c.value();
  return PowerWatts{linear_gain(source.gain) * linear_gain(device.gain) * (k * k) * source.power.value() / (r * r)};
}

PowerWatts bistatic_received_power(const Scenario& s) {
  if (s.is_monostatic()) {
    throw ConfigurationError("bistatic_received_power called with a mono-static geometry");
  }
  s.validate();
  return two_hop(s);
}

PowerWatts monostatic_received_power(const Scenario& s) {
  if (!s.is_monostatic()) {
    throw ConfigurationError("monostatic_received_power called with a bi-static geometry");
  }
  s.validate();
  return two_hop(s);
}

PowerWatts received_power(const Scenario& s) {
  return s.is_monostatic() ? monostatic_received_power(s) : bistatic_received_power(s);
}

LinkBudget link_budget(const Scenario& s) {
  const PowerWatts p_rx = received_power(s);
  const auto d = hop_distances(s.geometry);
  const double g_dev = s.device.gain.value();

  std::vector<LinkBudgetEntry> entries;
  entries.reserve(8);
  entries.push_back({"carrier power [dBm]", Decibel{dbm_from_watts(s.source.power).value()}});
  entries.push_back({"source antenna gain", Decibel{s.source.gain.value()}});
  entries.push_back({"device antenna gain (incident)", Decibel{g_dev}});
  entries.push_back({"path loss source->device", Decibel{-free_space_path_loss(d.r_c, s.carrier_frequency).value()}});
  entries.push_back({"backscatter efficiency", db_from_linear(s.device.efficiency.value())});
  entries.push_back({"device antenna gain (reflected)", Decibel{g_dev}});
  entries.push_back({"receiver antenna gain", Decibel{s.receiver.gain.value()}});
  entries.push_back(
      {"path loss device->receiver", Decibel{-free_space_path_loss(d.r_rx, s.carrier_frequency).value()}});

  return LinkBudget{std::move(entries), p_rx, dbm_from_watts(p_rx)};
}

}  // namespace bscap
