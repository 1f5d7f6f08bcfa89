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

#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace bscap {

/// Raised when a value falls outside the domain of a quantity or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a scenario is internally inconsistent (e.g. wrong geometry).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Linear factor between ERP (dipole reference) and EIRP.
inline constexpr double kErpToEirp = 1.64;

/// Free-space impedance used for field-strength conversion, ohms (120*pi).
inline constexpr double kFreeSpaceImpedance = 376.99111843077515;

namespace detail {

double require_finite(double v, const char* what);
double require_positive(double v, const char* what);
double require_non_negative(double v, const char* what);

struct FiniteCheck {
  static double check(double v, const char* what) { return require_finite(v, what); }
};
struct PositiveCheck {
  static double check(double v, const char* what) { return require_positive(v, what); }
};
struct NonNegativeCheck {
  static double check(double v, const char* what) { return require_non_negative(v, what); }
};

}  // namespace detail

/// Immutable scalar tagged with its physical dimension. `Tag` provides the
/// name used in diagnostics and the validation policy applied on construction.
template <typename Tag>
class Quantity {
 public:
  explicit Quantity(double value) : value_(Tag::Check::check(value, Tag::kName)) {}

  double value() const { return value_; }

  friend auto operator<=>(const Quantity&, const Quantity&) = default;

 private:
  double value_;
};

struct DecibelTag {
  using Check = detail::FiniteCheck;
  static constexpr const char* kName = "dB value";
};
struct PowerWattsTag {
  using Check = detail::PositiveCheck;
  static constexpr const char* kName = "power [W]";
};
struct PowerDbmTag {
  using Check = detail::FiniteCheck;
  static constexpr const char* kName = "power [dBm]";
};
struct GainDbiTag {
  using Check = detail::FiniteCheck;
  static constexpr const char* kName = "antenna gain [dBi]";
};
struct FrequencyHzTag {
  using Check = detail::PositiveCheck;
  static constexpr const char* kName = "frequency [Hz]";
};
struct BandwidthHzTag {
  using Check = detail::PositiveCheck;
  static constexpr const char* kName = "bandwidth [Hz]";
};
struct DistanceMetersTag {
  using Check = detail::PositiveCheck;
  static constexpr const char* kName = "distance [m]";
};
struct DataRateBpsTag {
  using Check = detail::NonNegativeCheck;
  static constexpr const char* kName = "data rate [bps]";
};
struct TemperatureKelvinTag {
  using Check = detail::PositiveCheck;
  static constexpr const char* kName = "temperature [K]";
};
struct FieldStrengthDbuVTag {
  using Check = detail::FiniteCheck;
  static constexpr const char* kName = "field strength [dBuV/m]";
};

using Decibel = Quantity<DecibelTag>;
using PowerWatts = Quantity<PowerWattsTag>;
using PowerDbm = Quantity<PowerDbmTag>;
using GainDbi = Quantity<GainDbiTag>;
using FrequencyHz = Quantity<FrequencyHzTag>;
using BandwidthHz = Quantity<BandwidthHzTag>;
using DistanceMeters = Quantity<DistanceMetersTag>;
using DataRateBps = Quantity<DataRateBpsTag>;
using TemperatureKelvin = Quantity<TemperatureKelvinTag>;
using FieldStrengthDbuV = Quantity<FieldStrengthDbuVTag>;

/// Backscatter efficiency, 0 < value <= 1.
class Efficiency {
 public:
  explicit Efficiency(double value);
  double value() const { return value_; }
  friend auto operator<=>(const Efficiency&, const Efficiency&) = default;

 private:
  double value_;
};

Decibel db_from_linear(double ratio);
double linear_from_db(Decibel d);

PowerWatts watts_from_dbm(PowerDbm p);
PowerDbm dbm_from_watts(PowerWatts p);

/// Linear gain factor of an antenna.
inline double linear_gain(GainDbi g) { return linear_from_db(Decibel{g.value()}); }

PowerWatts eirp_from_erp(PowerWatts erp);

DistanceMeters wavelength(FrequencyHz f);

}  // namespace bscap
