#pragma once

#include <vector>

#include "upconv/sellmeier.hpp"

namespace upconv {

// Poled-waveguide geometry. Units follow the bench conventions: grating length
// in m, poling period in um, operating temperature in C.
struct QpmGrating {
  double length_m;
  double period_um;
  double temperature_c;

  QpmGrating(double length_m, double period_um, double temperature_c);
};

// Signal + pump -> sum-frequency wavelength triple, all in um.
// 1/sfg = 1/signal + 1/pump must hold to 1e-12 relative.
struct SfgTriple {
  double signal_um;
  double pump_um;
  double sfg_um;

  SfgTriple(double signal_um, double pump_um, double sfg_um);
  static SfgTriple from_signal_pump(double signal_um, double pump_um);
};

// Energy conservation: l3 = l1 l2 / (l1 + l2).
double sfg_wavelength(double signal_um, double pump_um);

// First-order quasi-phase-matched mismatch in rad/m,
//   dk = 2 pi (n3/l3 - n1/l1 - n2/l2 - 1/period),
// all indices evaluated at the grating temperature.
double phase_mismatch(const QpmGrating& grating, const SfgTriple& triple,
                      const SellmeierModel& dispersion);

// Period (um) nulling the mismatch: 1 / (n3/l3 - n1/l1 - n2/l2), lambdas in um.
// Throws NumericError when the index combination admits no first-order period.
double solve_qpm_period(const SfgTriple& triple, double temperature_c,
                        const SellmeierModel& dispersion);

struct TuningPoint {
  double signal_um;
  double response;  // sinc^2(dk L / 2), in [0, 1]
};

// Low-conversion sinc^2 response over a strictly increasing signal grid.
std::vector<TuningPoint> tuning_curve(const QpmGrating& grating, double pump_um,
                                      const std::vector<double>& signal_grid_um,
                                      const SellmeierModel& dispersion);

// Signal wavelength (um) at which the grating is phase matched for this pump.
// Throws NumericError when no zero of the mismatch lies inside the dispersion
// validity range.
double phase_matched_signal(const QpmGrating& grating, double pump_um,
                            const SellmeierModel& dispersion);

// Full width at half maximum of the sinc^2 response in signal wavelength, nm.
// Bisection on response = 1/2 either side of the peak, to 1e-4 nm.
double pm_bandwidth_fwhm(const QpmGrating& grating, double pump_um,
                         const SellmeierModel& dispersion);

// sin(x)/x with sinc(0) = 1.
double sinc(double x);

}  // namespace upconv
