#pragma once

#include "upconv/conversion.hpp"

namespace upconv {

// Spontaneous-Raman noise channel of an upconversion detector. kappa is the
// system-level Stokes coefficient (counts/s per W of pump reaching the
// detector band), calibrated at one measured operating point; dark_rate is
// the detector's intrinsic dark count rate.
struct RamanConfig {
  double pump_wavelength_um;
  double signal_wavelength_um;
  double temperature_k;
  double kappa_cps_per_w;
  double dark_rate_cps;

  RamanConfig(double pump_wavelength_um, double signal_wavelength_um,
              double temperature_k, double kappa_cps_per_w, double dark_rate_cps);
};

// Anti-Stokes/Stokes rate ratio (omega_b/omega_a)^3 * exp(-hbar (omega_b -
// omega_a) / kB T) between a medium pumped at lambda_a (anti-Stokes sideband)
// and one pumped at lambda_b (Stokes sideband). Requires lambda_a > lambda_b
// so the frequency difference is positive.
double anti_stokes_stokes_ratio(double lambda_a_um, double lambda_b_um,
                                double temperature_k);

// R(P) = dark_rate + kappa * P * (eta_int(P) / eta_max): Raman photons are
// generated in proportion to pump power and reach the detector only when
// upconverted.
double noise_rate(const RamanConfig& config, const ConversionModel& conversion,
                  double pump_power_w);

// kappa that makes noise_rate reproduce measured_rate_cps at pump_power_w.
// The kappa field of `config` is ignored.
double calibrate_noise_coefficient(const RamanConfig& config,
                                   const ConversionModel& conversion,
                                   double pump_power_w, double measured_rate_cps);

// Predicted rate with pump and signal wavelengths interchanged (pump moved to
// the longer wavelength): the Stokes term scales by the anti-Stokes/Stokes
// ratio, the dark rate stays.
double interchanged_pump_noise_rate(const RamanConfig& config,
                                    const ConversionModel& conversion,
                                    double pump_power_w);

}  // namespace upconv
