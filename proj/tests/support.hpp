#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "upconv/budget.hpp"
#include "upconv/config.hpp"
#include "upconv/conversion.hpp"

namespace testsupport {

// Built-in defaults describe the reference operating point end to end.
inline upconv::SystemConfig reference_config() { return upconv::SystemConfig{}; }

inline upconv::DetectionSystem reference_system() {
  return reference_config().detection_system();
}

inline upconv::ConversionModel reference_conversion() {
  return reference_config().conversion_model();
}

// Shared synthetic-data recipe for the sine-squared fit tests: 10 powers at
// 60..600 mW, optional multiplicative Gaussian noise via Box-Muller over the
// same top-53-bit mt19937_64 uniforms the simulator documents.
inline std::vector<upconv::PowerCountSample> efficiency_samples(
    double amplitude, double p_peak_w, double noise_fraction, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] { return ((rng() >> 11) + 1) * 0x1.0p-53; };
  const upconv::ConversionModel truth(amplitude, p_peak_w, 0.052);
  std::vector<upconv::PowerCountSample> samples;
  samples.reserve(10);
  for (int i = 1; i <= 10; ++i) {
    const double power_w = 0.060 * i;
    double value = upconv::internal_efficiency(truth, power_w);
    if (noise_fraction > 0.0) {
      const double u1 = uniform();
      const double u2 = uniform();
      const double z = std::sqrt(-2.0 * std::log(u1)) *
                       std::cos(2.0 * std::numbers::pi * u2);
      value *= 1.0 + noise_fraction * z;
    }
    samples.emplace_back(power_w, value, upconv::SampleKind::kEfficiency);
  }
  return samples;
}

}  // namespace testsupport
