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
#include <limits>
#include <numbers>

#include "gtest/gtest.h"

#include "bscap/units.hpp"
#include "test_support.hpp"

namespace bscap {
namespace {

TEST(Units, DbFromLinear) {
  EXPECT_EQ(db_from_linear(1.0).value(), 0.0);
  EXPECT_DOUBLE_EQ(db_from_linear(1000.0).value(), 30.0);
  EXPECT_NEAR(db_from_linear(1.58).value(), 1.98657086954, 1e-9);
}

TEST(Units, DbFromLinearRejectsNonPositive) {
  EXPECT_THROW(db_from_linear(0.0), DomainError);
  EXPECT_THROW(db_from_linear(-1.0), DomainError);
  EXPECT_THROW(db_from_linear(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(db_from_linear(std::nan("")), DomainError);
}

TEST(Units, LinearFromDb) {
  EXPECT_EQ(linear_from_db(Decibel{0.0}), 1.0);
  EXPECT_NEAR(linear_from_db(Decibel{20.0}), 100.0, 1e-12);
  // The Shannon limit: Eb/N0 >= ln 2, i.e. about -1.59 dB.
  EXPECT_NEAR(linear_from_db(Decibel{-1.59}) / std::numbers::ln2, 1.0, 1e-3);
  EXPECT_THROW(Decibel{std::numeric_limits<double>::infinity()}, DomainError);
}

TEST(Units, DbmWatts) {
  EXPECT_NEAR(watts_from_dbm(PowerDbm{28.0}).value() / 0.631, 1.0, 2e-3);
  EXPECT_NEAR(watts_from_dbm(PowerDbm{0.0}).value(), 1e-3, 1e-18);
  EXPECT_NEAR(watts_from_dbm(PowerDbm{36.0}).value() / 4.0, 1.0, 5e-3);
  EXPECT_THROW(PowerWatts{0.0}, DomainError);
  EXPECT_THROW(PowerWatts{-1.0}, DomainError);
}

TEST(Units, EirpFromErp) {
  EXPECT_DOUBLE_EQ(eirp_from_erp(PowerWatts{2.0}).value(), 3.28);
  EXPECT_DOUBLE_EQ(eirp_from_erp(PowerWatts{1.0}).value(), 1.64);
  EXPECT_DOUBLE_EQ(eirp_from_erp(PowerWatts{0.5}).value(), 0.82);
}

TEST(Units, Wavelength) {
  EXPECT_EQ(wavelength(FrequencyHz{299792458.0}).value(), 1.0);
  EXPECT_NEAR(wavelength(FrequencyHz{900e6}).value(), 0.333102731, 1e-9);
  EXPECT_NEAR(wavelength(FrequencyHz{200e6}).value(), 1.49896229, 1e-9);
}

TEST(Units, QuantityInvariants) {
  EXPECT_THROW(Efficiency{0.0}, DomainError);
  EXPECT_THROW(Efficiency{1.01}, DomainError);
  EXPECT_NO_THROW(Efficiency{1.0});
  EXPECT_THROW(FrequencyHz{0.0}, DomainError);
  EXPECT_THROW(DistanceMeters{-3.0}, DomainError);
  EXPECT_THROW(TemperatureKelvin{0.0}, DomainError);
  EXPECT_NO_THROW(DataRateBps{0.0});
  EXPECT_THROW(DataRateBps{-1.0}, DomainError);
}

TEST(UnitsProperty, RoundTripsAndLogHomomorphism) {
  testing::ScenarioGenerator gen(7);
  for (int i = 0; i < 2000; ++i) {
    const double x = gen.log_uniform(1e-18, 1e6);
    const double y = gen.log_uniform(1e-9, 1e6);

    EXPECT_NEAR(linear_from_db(db_from_linear(x)) / x, 1.0, 1e-12);
    const PowerWatts w{x};
    EXPECT_NEAR(watts_from_dbm(dbm_from_watts(w)).value() / x, 1.0, 1e-12);
    EXPECT_NEAR(db_from_linear(x * y).value(), db_from_linear(x).value() + db_from_linear(y).value(), 1e-9);
    EXPECT_EQ(eirp_from_erp(PowerWatts{2.0 * x}).value(), 2.0 * eirp_from_erp(w).value());
  }
}

}  // namespace
}  // namespace bscap
