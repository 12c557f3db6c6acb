#pragma once

#include <vector>

#include "upconv/budget.hpp"

namespace upconv {

enum class SweepObjective { kMaxDe, kMaxSnr, kMinNep };

struct SweepSpec {
  double power_min_w;
  double power_max_w;
  int points;
  SweepObjective objective;

  SweepSpec(double power_min_w, double power_max_w, int points,
            SweepObjective objective);
};

struct DeNoisePoint {
  double power_w;
  double system_efficiency;
  double noise_rate_cps;
};

struct DepletionPoint {
  double power_w;
  double depletion_db;
};

// System efficiency and noise rate on a uniform power grid, ascending in P.
std::vector<DeNoisePoint> de_noise_curve(const DetectionSystem& system,
                                         const SweepSpec& spec);

// Signal depletion in dB on the same kind of grid.
std::vector<DepletionPoint> depletion_curve(const ConversionModel& model,
                                            const SweepSpec& spec);

struct PumpOptimum {
  double power_w;
  double value;
  // False when the coarse bracket failed the unimodality check and the grid
  // argmax was returned without golden-section refinement.
  bool refined;
};

// Coarse grid scan over spec.points, then golden-section refinement of the
// bracketing interval to 1e-6 relative in P. The SNR objective uses the
// given input photon rate and a 1 s integration window (the argmax does not
// depend on the window); the NEP objective uses the signal wavelength from
// the system's noise channel.
PumpOptimum optimize_pump(const DetectionSystem& system, const SweepSpec& spec,
                          double photon_rate_hz = 1e6);

}  // namespace upconv
