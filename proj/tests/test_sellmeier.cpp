#include "upconv/sellmeier.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "upconv/errors.hpp"

namespace upconv {
namespace {

const SellmeierModel kBulk = SellmeierModel::congruent_linbo3_e();

TEST(Sellmeier, FrozenIndexValues) {
  EXPECT_NEAR(refractive_index(kBulk, 1.55, 24.5), 2.1378613831803728, 1e-12);
  EXPECT_NEAR(refractive_index(kBulk, 1.55, 60.0), 2.139269805440728, 1e-12);
  EXPECT_NEAR(refractive_index(kBulk, 1.95, 60.0), 2.128404077608442, 1e-12);
  EXPECT_NEAR(refractive_index(kBulk, 1.0, 60.0), 2.1609331392058535, 1e-12);
  EXPECT_NEAR(refractive_index(kBulk, 2.0, 60.0), 2.12707705606425, 1e-12);
  EXPECT_NEAR(refractive_index(kBulk, 0.8635714285714286, 60.0),
              2.171031462786, 1e-11);
}

TEST(Sellmeier, CoefficientProvenanceRecorded) {
  EXPECT_NE(kBulk.reference.find("Jundt"), std::string::npos);
  EXPECT_NE(kBulk.reference.find("1997"), std::string::npos);
}

TEST(Sellmeier, WavelengthRangeEnforced) {
  EXPECT_THROW(refractive_index(kBulk, 0.39, 60.0), DomainError);
  EXPECT_THROW(refractive_index(kBulk, 5.01, 60.0), DomainError);
  EXPECT_NO_THROW(refractive_index(kBulk, 0.4, 60.0));
  EXPECT_NO_THROW(refractive_index(kBulk, 5.0, 60.0));
  try {
    refractive_index(kBulk, 0.2, 60.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("wavelength"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("0.4"), std::string::npos);
  }
}

TEST(Sellmeier, TemperatureRangeEnforced) {
  EXPECT_THROW(refractive_index(kBulk, 1.55, 19.9), DomainError);
  EXPECT_THROW(refractive_index(kBulk, 1.55, 200.1), DomainError);
  try {
    refractive_index(kBulk, 1.55, 300.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("temperature"), std::string::npos);
  }
}

TEST(Sellmeier, NonFiniteInputsRejected) {
  EXPECT_THROW(refractive_index(kBulk, std::nan(""), 60.0), DomainError);
  EXPECT_THROW(refractive_index(kBulk, 1.55, std::nan("")), DomainError);
}

TEST(Sellmeier, DerivativeMethodsAgree) {
  for (double wavelength : {0.8, 1.0, 1.55, 1.95, 3.0}) {
    for (double temperature : {25.0, 60.0, 150.0}) {
      const double analytic = index_derivative(kBulk, wavelength, temperature,
                                               DerivativeMethod::kAnalytic);
      const double numeric = index_derivative(kBulk, wavelength, temperature,
                                              DerivativeMethod::kCentralDifference);
      EXPECT_NEAR(numeric, analytic, 1e-6 * std::abs(analytic))
          << "wavelength " << wavelength << " um, " << temperature << " C";
    }
  }
}

TEST(Sellmeier, FrozenGroupIndices) {
  EXPECT_NEAR(group_index(kBulk, 1.55, 60.0), 2.183998883824, 1e-9);
  EXPECT_NEAR(group_index(kBulk, 1.95, 60.0), 2.180107876211, 1e-9);
  EXPECT_NEAR(group_index(kBulk, 0.8635714285714286, 60.0), 2.248836845659,
              1e-9);
  EXPECT_NEAR(group_index(kBulk, 0.788598679, 60.0), 2.271091234978, 1e-9);
}

TEST(Sellmeier, GroupIndexExceedsPhaseIndexUnderNormalDispersion) {
  for (double wavelength : {0.5, 0.9, 1.55, 1.8}) {
    EXPECT_GT(group_index(kBulk, wavelength, 60.0),
              refractive_index(kBulk, wavelength, 60.0))
        << "at " << wavelength << " um";
  }
}

TEST(Sellmeier, BandOffsetShiftsIndexOnlyInsideBand) {
  SellmeierModel model = kBulk;
  model.offsets.push_back({1.5, 1.6, 0.01});
  EXPECT_NEAR(refractive_index(model, 1.55, 60.0),
              refractive_index(kBulk, 1.55, 60.0) + 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(refractive_index(model, 1.45, 60.0),
                   refractive_index(kBulk, 1.45, 60.0));
  EXPECT_DOUBLE_EQ(refractive_index(model, 1.65, 60.0),
                   refractive_index(kBulk, 1.65, 60.0));
}

TEST(Sellmeier, OverlappingOffsetBandsSum) {
  SellmeierModel model = kBulk;
  model.offsets.push_back({1.5, 1.6, 0.01});
  model.offsets.push_back({1.0, 2.0, 0.002});
  EXPECT_NEAR(refractive_index(model, 1.55, 60.0),
              refractive_index(kBulk, 1.55, 60.0) + 0.012, 1e-15);
}

TEST(Sellmeier, BandOffsetLeavesGroupIndexShiftedByTheSameConstant) {
  SellmeierModel model = kBulk;
  model.offsets.push_back({1.5, 1.6, 0.01});
  // A constant index increment has zero wavelength derivative.
  EXPECT_NEAR(group_index(model, 1.55, 60.0), group_index(kBulk, 1.55, 60.0) + 0.01,
              1e-12);
}

}  // namespace
}  // namespace upconv
