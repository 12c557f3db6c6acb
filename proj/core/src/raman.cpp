#include "upconv/raman.hpp"

#include <cmath>

#include "upconv/constants.hpp"
#include "upconv/errors.hpp"

namespace upconv {

RamanConfig::RamanConfig(double pump_wavelength_um, double signal_wavelength_um,
                         double temperature_k, double kappa_cps_per_w,
                         double dark_rate_cps)
    : pump_wavelength_um(pump_wavelength_um),
      signal_wavelength_um(signal_wavelength_um),
      temperature_k(temperature_k),
      kappa_cps_per_w(kappa_cps_per_w),
      dark_rate_cps(dark_rate_cps) {
  if (!(pump_wavelength_um > 0.0) || !(signal_wavelength_um > 0.0)) {
    throw ValidationError("pump and signal wavelengths must be positive");
  }
  if (pump_wavelength_um == signal_wavelength_um) {
    throw ValidationError("pump and signal wavelengths must be distinct");
  }
  if (!(temperature_k > 0.0)) {
    throw ValidationError("temperature must be > 0 K");
  }
  if (!(kappa_cps_per_w >= 0.0)) {
    throw ValidationError("kappa must be >= 0 counts/s/W");
  }
  if (!(dark_rate_cps >= 0.0)) {
    throw ValidationError("dark rate must be >= 0 counts/s");
  }
}

double anti_stokes_stokes_ratio(double lambda_a_um, double lambda_b_um,
                                double temperature_k) {
  if (!(lambda_a_um > 0.0) || !(lambda_b_um > 0.0)) {
    throw DomainError("wavelengths must be positive");
  }
  if (!(lambda_a_um > lambda_b_um)) {
    throw DomainError(
        "lambda_a must exceed lambda_b so the pump frequency difference is positive");
  }
  if (!(temperature_k > 0.0)) {
    throw DomainError("temperature must be > 0 K");
  }
  const double omega_a = angular_frequency(lambda_a_um);
  const double omega_b = angular_frequency(lambda_b_um);
  const double prefactor = std::pow(omega_b / omega_a, 3);
  const double boltzmann =
      std::exp(-kConstants.hbar * (omega_b - omega_a) / (kConstants.k_B * temperature_k));
  return prefactor * boltzmann;
}

double noise_rate(const RamanConfig& config, const ConversionModel& conversion,
                  double pump_power_w) {
  if (!(pump_power_w >= 0.0)) {
    throw DomainError("pump power must be >= 0 W");
  }
  const double upconverted =
      internal_efficiency(conversion, pump_power_w) / conversion.eta_max;
  return config.dark_rate_cps + config.kappa_cps_per_w * pump_power_w * upconverted;
}

double calibrate_noise_coefficient(const RamanConfig& config,
                                   const ConversionModel& conversion,
                                   double pump_power_w, double measured_rate_cps) {
  if (!(pump_power_w > 0.0)) {
    throw DomainError("calibration pump power must be > 0 W");
  }
  if (!(measured_rate_cps > config.dark_rate_cps)) {
    throw DomainError("measured rate must exceed the dark rate to calibrate kappa");
  }
  const double upconverted =
      internal_efficiency(conversion, pump_power_w) / conversion.eta_max;
  if (!(upconverted > 0.0)) {
    throw DomainError("internal efficiency is zero at the calibration power");
  }
  return (measured_rate_cps - config.dark_rate_cps) / (pump_power_w * upconverted);
}

double interchanged_pump_noise_rate(const RamanConfig& config,
                                    const ConversionModel& conversion,
                                    double pump_power_w) {
  if (!(config.signal_wavelength_um > config.pump_wavelength_um)) {
    throw DomainError(
        "interchange prediction requires the signal wavelength to exceed the pump's");
  }
  const double ratio = anti_stokes_stokes_ratio(
      config.signal_wavelength_um, config.pump_wavelength_um, config.temperature_k);
  const double stokes = noise_rate(config, conversion, pump_power_w) - config.dark_rate_cps;
  return config.dark_rate_cps + stokes * ratio;
}

}  // namespace upconv
