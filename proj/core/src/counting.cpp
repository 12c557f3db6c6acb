#include "upconv/counting.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "upconv/constants.hpp"
#include "upconv/errors.hpp"

namespace upconv {

namespace {

double uniform53(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

void check_rates(double eta_sys, double noise_rate_cps, double gate_width_s) {
  if (!(eta_sys >= 0.0) || !(eta_sys <= 1.0)) {
    throw DomainError("system efficiency must lie in [0, 1]");
  }
  if (!(noise_rate_cps >= 0.0)) {
    throw DomainError("noise rate must be >= 0 counts/s");
  }
  if (!(gate_width_s >= 0.0)) {
    throw DomainError("gate width must be >= 0 s");
  }
}

}  // namespace

GatedSource::GatedSource(double photon_rate_hz, double gate_width_s,
                         double gate_rate_hz)
    : photon_rate_hz(photon_rate_hz),
      gate_width_s(gate_width_s),
      gate_rate_hz(gate_rate_hz) {
  if (!(photon_rate_hz > 0.0)) {
    throw ValidationError("photon rate must be > 0 /s");
  }
  if (!(gate_width_s > 0.0)) {
    throw ValidationError("gate width must be > 0 s");
  }
  if (!(gate_rate_hz > 0.0)) {
    throw ValidationError("gate rate must be > 0 /s");
  }
  if (gate_width_s * gate_rate_hz > 1.0) {
    throw ValidationError("gate duty cycle gate_width * gate_rate must be <= 1");
  }
}

double mean_photons_per_gate(const GatedSource& source) {
  return source.photon_rate_hz * source.gate_width_s;
}

double click_probability(double mu, double eta_sys, double noise_rate_cps,
                         double gate_width_s) {
  if (!(mu >= 0.0)) {
    throw DomainError("mean photon number must be >= 0");
  }
  check_rates(eta_sys, noise_rate_cps, gate_width_s);
  return -std::expm1(-(mu * eta_sys + noise_rate_cps * gate_width_s));
}

double snr(double signal_rate_cps, double noise_rate_cps, double integration_time_s) {
  if (!(signal_rate_cps >= 0.0) || !(noise_rate_cps >= 0.0)) {
    throw DomainError("count rates must be >= 0");
  }
  if (!(integration_time_s > 0.0)) {
    throw DomainError("integration time must be > 0 s");
  }
  const double total = signal_rate_cps + noise_rate_cps;
  if (total == 0.0) {
    return 0.0;
  }
  return signal_rate_cps * integration_time_s /
         std::sqrt(total * integration_time_s);
}

double nep(double wavelength_um, double eta_sys, double noise_rate_cps) {
  if (!(wavelength_um > 0.0)) {
    throw DomainError("wavelength must be > 0 um");
  }
  if (!(eta_sys > 0.0) || !(eta_sys <= 1.0)) {
    throw DomainError("system efficiency must lie in (0, 1]");
  }
  if (!(noise_rate_cps >= 0.0)) {
    throw DomainError("noise rate must be >= 0 counts/s");
  }
  return photon_energy(wavelength_um) * std::sqrt(2.0 * noise_rate_cps) / eta_sys;
}

CountingResult simulate_counts(const GatedSource& source, double eta_sys,
                               double noise_rate_cps, double duration_s,
                               std::uint64_t seed) {
  if (!(duration_s > 0.0)) {
    throw DomainError("duration must be > 0 s");
  }
  check_rates(eta_sys, noise_rate_cps, source.gate_width_s);

  const long long gates = std::llround(duration_s * source.gate_rate_hz);
  if (gates > kMaxSimulatedGates) {
    std::ostringstream msg;
    msg << gates << " gates exceed the simulation cap of " << kMaxSimulatedGates
        << "; use click_probability for the analytic expectation instead";
    throw ResourceError(msg.str());
  }

  const double mu = mean_photons_per_gate(source);
  const double p_signal = -std::expm1(-mu * eta_sys);
  const double p_noise = -std::expm1(-noise_rate_cps * source.gate_width_s);

  std::mt19937_64 rng(seed);
  long long signal_counts = 0;
  long long noise_counts = 0;
  for (long long gate = 0; gate < gates; ++gate) {
    if (uniform53(rng) < p_signal) {
      ++signal_counts;
    } else if (uniform53(rng) < p_noise) {
      ++noise_counts;
    }
  }

  const double total = static_cast<double>(signal_counts + noise_counts);
  const double empirical_snr =
      total > 0.0 ? static_cast<double>(signal_counts) / std::sqrt(total) : 0.0;
  return {signal_counts, noise_counts, static_cast<double>(gates) / source.gate_rate_hz,
          empirical_snr, seed};
}

}  // namespace upconv
