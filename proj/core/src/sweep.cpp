#include "upconv/sweep.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "upconv/counting.hpp"
#include "upconv/errors.hpp"

namespace upconv {

namespace {

std::vector<double> power_grid(const SweepSpec& spec) {
  std::vector<double> grid(spec.points);
  const double span = spec.power_max_w - spec.power_min_w;
  for (int i = 0; i < spec.points; ++i) {
    grid[i] = spec.power_min_w + span * static_cast<double>(i) / (spec.points - 1);
  }
  return grid;
}

}  // namespace

SweepSpec::SweepSpec(double power_min_w, double power_max_w, int points,
                     SweepObjective objective)
    : power_min_w(power_min_w),
      power_max_w(power_max_w),
      points(points),
      objective(objective) {
  if (!(power_min_w >= 0.0)) {
    throw ValidationError("power_min must be >= 0 W");
  }
  if (!(power_max_w > power_min_w)) {
    throw ValidationError("power_max must exceed power_min");
  }
  if (points < 2) {
    throw ValidationError("sweep needs at least 2 points");
  }
}

std::vector<DeNoisePoint> de_noise_curve(const DetectionSystem& system,
                                         const SweepSpec& spec) {
  std::vector<DeNoisePoint> curve;
  curve.reserve(spec.points);
  for (double p : power_grid(spec)) {
    curve.push_back({p, system_efficiency(system, p),
                     noise_rate(system.noise, system.conversion, p)});
  }
  return curve;
}

std::vector<DepletionPoint> depletion_curve(const ConversionModel& model,
                                            const SweepSpec& spec) {
  std::vector<DepletionPoint> curve;
  curve.reserve(spec.points);
  for (double p : power_grid(spec)) {
    curve.push_back({p, signal_depletion_db(model, p)});
  }
  return curve;
}

PumpOptimum optimize_pump(const DetectionSystem& system, const SweepSpec& spec,
                          double photon_rate_hz) {
  if (!(photon_rate_hz > 0.0)) {
    throw ValidationError("photon rate must be > 0 /s");
  }

  // Larger is better; the NEP objective is negated for the search and the
  // true value restored on return.
  const bool minimize = spec.objective == SweepObjective::kMinNep;
  const auto objective = [&](double p) {
    switch (spec.objective) {
      case SweepObjective::kMaxDe:
        return system_efficiency(system, p);
      case SweepObjective::kMaxSnr: {
        const double s = photon_rate_hz * system_efficiency(system, p);
        const double n = noise_rate(system.noise, system.conversion, p);
        return snr(s, n, 1.0);
      }
      case SweepObjective::kMinNep: {
        const double eta = system_efficiency(system, p);
        if (!(eta > 0.0)) {
          return -std::numeric_limits<double>::infinity();
        }
        const double n = noise_rate(system.noise, system.conversion, p);
        return -nep(system.noise.signal_wavelength_um, eta, n);
      }
    }
    throw ValidationError("unknown sweep objective");
  };

  const std::vector<double> grid = power_grid(spec);
  std::vector<double> values(grid.size());
  int best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = objective(grid[i]);
    if (values[i] > values[best]) {
      best = static_cast<int>(i);
    }
  }

  const int last = static_cast<int>(grid.size()) - 1;
  const bool interior = best > 0 && best < last;
  if (interior && !(values[best] > values[best - 1] && values[best] > values[best + 1])) {
    // Plateau around the coarse optimum: golden section could wander, so
    // report the grid argmax unrefined.
    const double v = values[best];
    return {grid[best], minimize ? -v : v, false};
  }

  double a = grid[best > 0 ? best - 1 : best];
  double b = grid[best < last ? best + 1 : best];
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-6 * 0.5 * (std::abs(a) + std::abs(b)) + 1e-15) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  const double p_star = 0.5 * (a + b);
  const double v = objective(p_star);
  return {p_star, minimize ? -v : v, true};
}

}  // namespace upconv
