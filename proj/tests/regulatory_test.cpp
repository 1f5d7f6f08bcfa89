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

#include <cmath>

#include "gtest/gtest.h"

#include "bscap/capacity.hpp"
#include "bscap/figures.hpp"
#include "bscap/regulatory.hpp"
#include "test_support.hpp"

namespace bscap {
namespace {

const BandProfile& profile(std::string_view id) {
  const BandProfile* p = find_profile(id);
  EXPECT_NE(p, nullptr) << id;
  return *p;
}

Scenario in_band(Scenario s) {
  s.carrier_frequency = FrequencyHz{915e6};
  return s;
}

Scenario with_gain(Scenario s, double g) {
  s.source.gain = GainDbi{g};
  s.receiver.gain = GainDbi{g};
  return s;
}

TEST(Profiles, BuiltinSet) {
  const auto all = builtin_profiles();
  ASSERT_EQ(all.size(), 6u);
  const char* ids[] = {"FCC_915", "FCC_2400", "FCC_5800", "ETSI_868_LOWER", "ETSI_915_UPPER", "ETSI_2400"};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(all[i].id, ids[i]);

  EXPECT_EQ(profile("FCC_915").center_frequency.value(), 915e6);
  EXPECT_EQ(profile("FCC_915").max_bandwidth.value(), 26e6);
  EXPECT_EQ(profile("FCC_2400").max_bandwidth.value(), 83.5e6);
  EXPECT_EQ(profile("FCC_5800").max_bandwidth.value(), 125e6);
  EXPECT_EQ(profile("ETSI_868_LOWER").max_bandwidth.value(), 200e3);
  EXPECT_EQ(profile("ETSI_915_UPPER").max_bandwidth.value(), 400e3);
  EXPECT_EQ(profile("ETSI_2400").max_bandwidth.value(), 8e6);
  EXPECT_TRUE(std::holds_alternative<ConductedPlusGainLimit>(profile("FCC_5800").limit));
  EXPECT_TRUE(std::holds_alternative<ErpLimit>(profile("ETSI_915_UPPER").limit));
  EXPECT_EQ(find_profile("NOPE"), nullptr);
}

TEST(Profiles, EffectiveEirpLimit) {
  EXPECT_NEAR(effective_eirp_limit(profile("ETSI_868_LOWER")).value(), 3.28, 1e-12);
  EXPECT_NEAR(effective_eirp_limit(profile("FCC_915")).value(), 3.98107170553, 1e-9);
  EXPECT_NEAR(dbm_from_watts(effective_eirp_limit(profile("FCC_915"))).value(), 36.0, 1e-12);
  EXPECT_EQ(effective_eirp_limit(profile("ETSI_2400")).value(), 0.5);
}

TEST(Validate, ReferenceScenarioIsCompliant) {
  const Scenario s = in_band(reference_scenario(DistanceMeters{5.0}, BandwidthHz{400e3}));
  EXPECT_TRUE(validate(s, profile("FCC_915")).empty());
  const auto off = validate(reference_scenario(DistanceMeters{5.0}, BandwidthHz{400e3}), profile("FCC_915"));
  ASSERT_EQ(off.size(), 1u);
  EXPECT_EQ(off[0].kind, ViolationKind::kFrequencyOutOfBand);
}

TEST(Validate, ReportsEachKind) {
  Scenario s = in_band(reference_scenario(DistanceMeters{5.0}, BandwidthHz{1e6}));
  s.source.power = watts_from_dbm(PowerDbm{30.0});
  const auto v = validate(s, profile("FCC_915"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kEirpExceeded);
  EXPECT_NEAR(dbm_from_watts(PowerWatts{v[0].measured}).value(), 38.0, 1e-9);
  EXPECT_NEAR(dbm_from_watts(PowerWatts{v[0].limit}).value(), 36.0, 1e-9);

  const auto upper = validate(s, profile("ETSI_915_UPPER"));
  ASSERT_EQ(upper.size(), 2u);
  EXPECT_EQ(upper[1].kind, ViolationKind::kBandwidthExceeded);
  EXPECT_GT(upper[1].measured, upper[1].limit);

  s = in_band(reference_scenario(DistanceMeters{5.0}, std::nullopt));
  const auto infinite = validate(s, profile("FCC_915"));
  ASSERT_EQ(infinite.size(), 1u);
  EXPECT_EQ(infinite[0].kind, ViolationKind::kBandwidthExceeded);

  s = reference_scenario(DistanceMeters{5.0}, BandwidthHz{100e3});
  const auto off = validate(s, profile("ETSI_868_LOWER"));
  ASSERT_EQ(off.size(), 2u);
  EXPECT_EQ(off[1].kind, ViolationKind::kFrequencyOutOfBand);
  EXPECT_EQ(off[1].limit, 868.1e6);
}

TEST(CapCarrierPower, CapsAndIsIdempotent) {
  const Scenario s = with_gain(in_band(reference_scenario(DistanceMeters{5.0}, BandwidthHz{400e3})), 9.0);
  const Scenario capped = cap_carrier_power(s, profile("FCC_915"));
  EXPECT_NEAR(dbm_from_watts(capped.source.power).value(), 27.0, 1e-9);
  EXPECT_EQ(capped.source.gain, s.source.gain);
  EXPECT_EQ(cap_carrier_power(capped, profile("FCC_915")).source.power, capped.source.power);
  EXPECT_TRUE(validate(capped, profile("FCC_915")).empty());

  // Under the limit: untouched.
  const Scenario low = reference_scenario(DistanceMeters{5.0}, BandwidthHz{400e3});
  EXPECT_EQ(cap_carrier_power(with_gain(low, 4.0), profile("FCC_915")).source.power, low.source.power);
}

TEST(CapCarrierPower, GainHelpsOnlyOnReceive) {
  const NoiseModel noise{};
  const Scenario base = with_gain(reference_scenario(DistanceMeters{50.0}, std::nullopt), 8.0);
  const Scenario up = with_gain(base, 9.0);
  const auto& fcc = profile("FCC_915");

  const double rate_factor = capacity(cap_carrier_power(up, fcc), noise).c_infinity.value() /
                             capacity(cap_carrier_power(base, fcc), noise).c_infinity.value();
  EXPECT_NEAR(rate_factor / 1.26, 1.0, 0.01);

  const DataRateBps target{1e6};
  const double range_factor = solve_range_for_rate(target, cap_carrier_power(up, fcc), noise).value() /
                              solve_range_for_rate(target, cap_carrier_power(base, fcc), noise).value();
  EXPECT_NEAR(range_factor / 1.06, 1.0, 0.01);
}

TEST(RegulatoryProperty, CapInvariants) {
  testing::ScenarioGenerator gen(31);
  for (int i = 0; i < 300; ++i) {
    const Scenario s = i % 2 ? gen.monostatic() : gen.bistatic();
    for (const auto& p : builtin_profiles()) {
      const Scenario c = cap_carrier_power(s, p);
      EXPECT_LE(c.source.power, s.source.power);
      EXPECT_EQ(cap_carrier_power(c, p).source.power, c.source.power);
      for (const auto& v : validate(c, p)) EXPECT_NE(v.kind, ViolationKind::kEirpExceeded);
    }
  }
}

}  // namespace
}  // namespace bscap
