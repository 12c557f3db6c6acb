#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "upconv/budget.hpp"
#include "upconv/counting.hpp"
#include "upconv/qpm.hpp"
#include "upconv/sellmeier.hpp"
#include "upconv/sweep.hpp"

namespace upconv {

struct PmCurveSpec {
  double span_nm = 4.0;
  int points = 201;
  double center_nm = 0.0;  // 0 = center on the phase-matched peak
};

// Full description of one detector operating point. Defaults describe a
// 52 mm PPLN waveguide poled at 19.6 um, held at 60 C, upconverting 1950 nm
// against a 1550 nm pump, with the loss chain and counting figures of the
// reference device. Sections and keys carry their units in the names;
// chain losses are written as non-positive dB as on a datasheet.
struct SystemConfig {
  // [grating]
  double grating_length_mm = 52.0;
  double grating_period_um = 19.6;
  double grating_temperature_c = 60.0;

  // [wavelengths]
  double signal_nm = 1950.0;
  double pump_nm = 1550.0;

  // [conversion]  (default eta_max makes the -23.5 dB depletion identity exact)
  double eta_max = 1.0 - std::pow(10.0, -2.35);
  double p_peak_mw = 300.0;

  // [chain]  (name, loss_db <= 0), applied in order
  std::vector<std::pair<std::string, double>> chain_elements = {
      {"waveguide_throughput", -4.5},
      {"wdm", -1.0},
      {"free_space_path", -0.8},
  };

  // [detector]
  double detector_efficiency = 0.45;
  double dark_cps = 25.0;

  // [noise]  (calibration point for the Raman coefficient)
  double pump_power_mw = 300.0;
  double measured_noise_cps = 24500.0;

  // [source]
  double photon_rate_hz = 1e6;
  double gate_ns = 1.0;
  double gate_rate_hz = 1e6;

  // [sweep]
  double sweep_min_mw = 0.0;
  double sweep_max_mw = 600.0;
  int sweep_points = 241;
  SweepObjective sweep_objective = SweepObjective::kMaxDe;

  // [pm_curve]
  PmCurveSpec pm_curve;

  // [sellmeier]  (waveguide index corrections on top of the bulk model)
  std::vector<IndexBandOffset> sellmeier_offsets;

  double signal_um() const { return signal_nm * 1e-3; }
  double pump_um() const { return pump_nm * 1e-3; }

  SellmeierModel sellmeier() const;
  QpmGrating grating() const;
  ConversionModel conversion_model() const;
  std::vector<LossElement> chain() const;
  // kappa calibrated so noise_rate reproduces the [noise] point; Eq-ratio
  // temperature taken from the grating setpoint.
  RamanConfig raman() const;
  DetectionSystem detection_system() const;
  GatedSource source() const;
  SweepSpec sweep() const;

  // Constructs every derived object once, so a bad value fails at load time
  // rather than mid-command.
  void validate() const;
};

// Sectioned key-value text. Unknown sections or keys, duplicate scalar keys,
// and malformed values are all hard errors naming the offending line.
SystemConfig parse_system_config(const std::string& text,
                                 const std::string& source_name);
SystemConfig load_system_config(const std::filesystem::path& path);

}  // namespace upconv
