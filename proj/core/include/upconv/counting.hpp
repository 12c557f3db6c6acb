#pragma once

#include <cstdint>

namespace upconv {

struct GatedSource {
  double photon_rate_hz;
  double gate_width_s;
  double gate_rate_hz;

  GatedSource(double photon_rate_hz, double gate_width_s, double gate_rate_hz);
};

inline constexpr long long kMaxSimulatedGates = 1'000'000'000;

// mu = photon_rate * gate_width.
double mean_photons_per_gate(const GatedSource& source);

// Poisson click model per gate: p = 1 - exp(-(mu eta_sys + noise_rate * gate_width)).
// The noise term uses the cw rate times the gate width (the noise is ungated).
double click_probability(double mu, double eta_sys, double noise_rate_cps,
                         double gate_width_s);

// Shot-noise-limited counting: SNR = S T / sqrt((S + N) T); 0 when S + N = 0.
double snr(double signal_rate_cps, double noise_rate_cps, double integration_time_s);

// Noise-equivalent power (h c / lambda) sqrt(2 R) / eta_sys, in W/sqrt(Hz).
double nep(double wavelength_um, double eta_sys, double noise_rate_cps);

struct CountingResult {
  long long signal_counts;
  long long noise_counts;
  double elapsed_s;
  double snr;
  std::uint64_t seed;
};

// Per-gate Bernoulli simulation. Generator contract, stable across releases:
// std::mt19937_64 seeded with `seed`; each uniform deviate is the top 53 bits
// of one output word, u = (word >> 11) * 2^-53. Per gate, one deviate decides
// the signal click; only if it misses, a second deviate decides the noise
// click, so the click total is Binomial(gates, click_probability) exactly.
// Identical seed and inputs give identical results on every platform.
CountingResult simulate_counts(const GatedSource& source, double eta_sys,
                               double noise_rate_cps, double duration_s,
                               std::uint64_t seed);

}  // namespace upconv
