#pragma once

#include <numbers>

namespace upconv {

// CODATA 2018 values; h and k_B are exact by the SI definition.
struct PhysicalConstants {
  double c = 299792458.0;                                     // speed of light, m/s
  double h = 6.62607015e-34;                                  // Planck constant, J s
  double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);    // reduced Planck constant, J s
  double k_B = 1.380649e-23;                                  // Boltzmann constant, J/K
};

inline constexpr PhysicalConstants kConstants{};

inline constexpr double celsius_to_kelvin(double t_celsius) { return t_celsius + 273.15; }

// Angular frequency (rad/s) of light with vacuum wavelength in um.
inline double angular_frequency(double wavelength_um) {
  return 2.0 * std::numbers::pi * kConstants.c / (wavelength_um * 1e-6);
}

// Photon energy h c / lambda in J, wavelength in um.
inline double photon_energy(double wavelength_um) {
  return kConstants.h * kConstants.c / (wavelength_um * 1e-6);
}

}  // namespace upconv
