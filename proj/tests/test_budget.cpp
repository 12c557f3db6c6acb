#include "upconv/budget.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "upconv/errors.hpp"
#include "support.hpp"

namespace upconv {
namespace {

std::vector<LossElement> reference_chain() {
  return {LossElement::from_loss_db("waveguide_throughput", 4.5),
          LossElement::from_loss_db("wdm", 1.0),
          LossElement::from_loss_db("free_space_path", 0.8)};
}

TEST(DbConversion, KnownValuesAndInverses) {
  EXPECT_EQ(db_to_fraction(0.0), 1.0);
  EXPECT_NEAR(db_to_fraction(-3.0103), 0.5, 1e-5);
  EXPECT_EQ(fraction_to_db(1.0), 0.0);
  for (double f : {0.01, 0.234422881531992, 0.45, 0.9999, 1.0}) {
    EXPECT_NEAR(db_to_fraction(fraction_to_db(f)), f, f * 1e-12);
  }
  for (double db : {-30.0, -6.3, -0.001, 0.0}) {
    EXPECT_NEAR(fraction_to_db(db_to_fraction(db)), db, 1e-12);
  }
}

TEST(DbConversion, RejectsGainAndBadFractions) {
  EXPECT_THROW(db_to_fraction(0.1), DomainError);
  EXPECT_THROW(fraction_to_db(0.0), DomainError);
  EXPECT_THROW(fraction_to_db(-0.5), DomainError);
  EXPECT_THROW(fraction_to_db(1.2), DomainError);
}

TEST(LossElementType, FactoriesInterconvert) {
  const auto from_db = LossElement::from_loss_db("wdm", 1.0);
  EXPECT_NEAR(from_db.efficiency(), std::pow(10.0, -0.1), 1e-15);
  const auto from_eff = LossElement::from_efficiency("vbg", 0.95);
  EXPECT_NEAR(from_eff.loss_db(), -10.0 * std::log10(0.95), 1e-15);
  EXPECT_NEAR(from_eff.efficiency(), 0.95, 1e-12);
  EXPECT_EQ(from_eff.name(), "vbg");
}

TEST(LossElementType, ValidatesInputs) {
  EXPECT_THROW(LossElement::from_loss_db("x", -0.1), ValidationError);
  EXPECT_THROW(LossElement::from_loss_db("", 1.0), ValidationError);
  EXPECT_THROW(LossElement::from_efficiency("x", 0.0), ValidationError);
  EXPECT_THROW(LossElement::from_efficiency("x", 1.1), ValidationError);
}

TEST(ChainTransmission, FrozenReferenceChain) {
  const double transmission = chain_transmission(reference_chain());
  EXPECT_NEAR(transmission, 0.234422881531992, 0.2344 * 1e-12);
  EXPECT_NEAR(transmission, db_to_fraction(-6.3), 0.2344 * 1e-12);
}

TEST(ChainTransmission, IdentityAndHalving) {
  EXPECT_EQ(chain_transmission({LossElement::from_loss_db("passthrough", 0.0)}), 1.0);
  const auto half = LossElement::from_loss_db("half", 3.0103);
  EXPECT_NEAR(chain_transmission({half, half}), 0.25, 1e-5);
}

TEST(ChainTransmission, OrderIndependent) {
  auto chain = reference_chain();
  const double forward = chain_transmission(chain);
  std::reverse(chain.begin(), chain.end());
  EXPECT_NEAR(chain_transmission(chain), forward, forward * 1e-12);
  std::swap(chain[0], chain[1]);
  EXPECT_NEAR(chain_transmission(chain), forward, forward * 1e-12);
}

TEST(ChainTransmission, EmptyChainRejected) {
  EXPECT_THROW(chain_transmission({}), ValidationError);
}

TEST(DetectionSystemType, ValidatesFields) {
  const auto config = testsupport::reference_config();
  EXPECT_THROW(DetectionSystem({}, config.conversion_model(), 0.45, config.raman()),
               ValidationError);
  EXPECT_THROW(
      DetectionSystem(reference_chain(), config.conversion_model(), 0.0, config.raman()),
      ValidationError);
  EXPECT_THROW(
      DetectionSystem(reference_chain(), config.conversion_model(), 1.2, config.raman()),
      ValidationError);
}

TEST(SystemEfficiency, FrozenOperatingPoint) {
  const auto system = testsupport::reference_system();
  EXPECT_NEAR(system_efficiency(system, 0.3), 0.105019088842774, 0.105 * 1e-12);
  EXPECT_EQ(system_efficiency(system, 0.0), 0.0);
}

TEST(SystemEfficiency, VolumeBraggGratingOption) {
  const auto config = testsupport::reference_config();
  auto chain = reference_chain();
  chain.push_back(LossElement::from_efficiency("vbg", 0.95));
  const DetectionSystem system(chain, config.conversion_model(), 0.45, config.raman());
  EXPECT_NEAR(system_efficiency(system, 0.3), 0.099768134400635, 0.0998 * 1e-12);
}

TEST(SystemEfficiency, BoundedByChainAndDetector) {
  const auto system = testsupport::reference_system();
  const double chain = chain_transmission(system.chain);
  for (int i = 0; i <= 60; ++i) {
    const double p = 0.6 * i / 60.0;
    const double eta = system_efficiency(system, p);
    EXPECT_LE(eta, chain);
    EXPECT_LE(eta, system.detector_efficiency);
  }
}

TEST(SystemEfficiency, PeaksAtPeakPower) {
  const auto system = testsupport::reference_system();
  const double at_peak = system_efficiency(system, system.conversion.p_peak_w);
  for (int i = 0; i <= 120; ++i) {
    EXPECT_LE(system_efficiency(system, 0.6 * i / 120.0), at_peak);
  }
}

}  // namespace
}  // namespace upconv
