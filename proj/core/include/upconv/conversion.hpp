#pragma once

#include <vector>

namespace upconv {

// sin^2 pump-power law for the internal conversion efficiency of a
// fully phase-matched waveguide. p_peak_w is the pump power of maximum
// conversion; eta_max the efficiency ceiling reached there.
struct ConversionModel {
  double eta_max;
  double p_peak_w;
  double length_m;

  ConversionModel(double eta_max, double p_peak_w, double length_m);

  // eta_nor = pi^2 / (4 p_peak L^2), in 1/(W m^2).
  double normalized_efficiency() const;
};

enum class SampleKind { kEfficiency, kNoise };

struct PowerCountSample {
  double pump_power_w;
  double value;
  SampleKind kind;

  PowerCountSample(double pump_power_w, double value, SampleKind kind);
};

// eta_int(P) = eta_max * sin^2((pi/2) sqrt(P / p_peak)).
double internal_efficiency(const ConversionModel& model, double pump_power_w);

// 10 log10(1 - eta_int(P)); -infinity on complete depletion (eta_int = 1).
double signal_depletion_db(const ConversionModel& model, double pump_power_w);

// Inverse of the depletion readout: 1 - 10^(db/10) for db <= 0.
double conversion_from_depletion(double depletion_db);

struct SineSquaredFit {
  double amplitude;
  double p_peak_w;
  double rms_residual;
};

// Least-squares fit of A sin^2((pi/2) sqrt(P/p)) to efficiency samples.
// Damped Gauss-Newton, multi-started over p in {Pmax/4, Pmax/2, Pmax, 2 Pmax}
// to escape the over-rotation local minima; best converged start wins.
SineSquaredFit fit_sine_squared(const std::vector<PowerCountSample>& samples);

// Ordinary least squares polynomial in pump power, coefficients returned
// lowest order first. degree <= 3.
std::vector<double> fit_polynomial(const std::vector<PowerCountSample>& samples,
                                   int degree);

}  // namespace upconv
