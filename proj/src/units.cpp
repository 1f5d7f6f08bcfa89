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

#include "bscap/units.hpp"

#include <cmath>

namespace bscap {
namespace detail {

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite, got " + std::to_string(v));
  }
  return v;
}

double require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and > 0, got " + std::to_string(v));
  }
  return v;
}

double require_non_negative(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(what) + " must be finite and >= 0, got " + std::to_string(v));
  }
  return v;
}

}  // namespace detail

Efficiency::Efficiency(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw DomainError("efficiency must lie in (0, 1], got " + std::to_string(value));
  }
}

Decibel db_from_linear(double ratio) {
  detail::require_positive(ratio, "linear ratio");
  return Decibel{10.0 * std::log10(ratio)};
}

double linear_from_db(Decibel d) { return std::pow(10.0, d.value() / 10.0); }

PowerWatts watts_from_dbm(PowerDbm p) { return PowerWatts{std::pow(10.0, (p.value() - 30.0) / 10.0)}; }

PowerDbm dbm_from_watts(PowerWatts p) { return PowerDbm{10.0 * std::log10(p.value()) + 30.0}; }

PowerWatts eirp_from_erp(PowerWatts erp) { return PowerWatts{erp.value() * kErpToEirp}; }

DistanceMeters wavelength(FrequencyHz f) { return DistanceMeters{kSpeedOfLight / f.value()}; }

}  // namespace bscap
