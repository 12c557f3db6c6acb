#include "upconv/qpm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "upconv/errors.hpp"

namespace upconv {

namespace {

constexpr double kPi = std::numbers::pi;

// Signal-wavelength tolerance of the FWHM bisection: 1e-4 nm.
constexpr double kFwhmTolUm = 1e-7;

// n3/l3 - n1/l1 - n2/l2 in 1/um at the given temperature.
double index_mismatch_per_um(const SfgTriple& t, double temperature_c,
                             const SellmeierModel& dispersion) {
  const double n1 = refractive_index(dispersion, t.signal_um, temperature_c);
  const double n2 = refractive_index(dispersion, t.pump_um, temperature_c);
  const double n3 = refractive_index(dispersion, t.sfg_um, temperature_c);
  return n3 / t.sfg_um - n1 / t.signal_um - n2 / t.pump_um;
}

// Smallest signal wavelength keeping the SFG wavelength inside validity.
double min_signal_for_validity(double pump_um, const SellmeierModel& d) {
  double lo = d.lambda_min_um;
  if (pump_um > d.lambda_min_um) {
    // l3(l1) = l1 l2/(l1+l2) >= lmin  <=>  l1 >= l2 lmin / (l2 - lmin)
    lo = std::max(lo, pump_um * d.lambda_min_um / (pump_um - d.lambda_min_um));
  }
  return lo;
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-8) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}

QpmGrating::QpmGrating(double length_m, double period_um, double temperature_c)
    : length_m(length_m), period_um(period_um), temperature_c(temperature_c) {
  if (!(length_m > 0.0)) {
    throw ValidationError("grating length must be > 0 m");
  }
  if (!(period_um > 0.0)) {
    throw ValidationError("poling period must be > 0 um");
  }
}

SfgTriple::SfgTriple(double signal_um, double pump_um, double sfg_um)
    : signal_um(signal_um), pump_um(pump_um), sfg_um(sfg_um) {
  if (!(signal_um > 0.0) || !(pump_um > 0.0) || !(sfg_um > 0.0)) {
    throw ValidationError("SFG triple wavelengths must all be positive");
  }
  const double lhs = 1.0 / sfg_um;
  const double rhs = 1.0 / signal_um + 1.0 / pump_um;
  if (std::abs(lhs - rhs) > 1e-12 * rhs) {
    std::ostringstream msg;
    msg << "SFG triple violates energy conservation: 1/" << sfg_um << " != 1/" << signal_um
        << " + 1/" << pump_um;
    throw ValidationError(msg.str());
  }
  if (!(sfg_um < std::min(signal_um, pump_um))) {
    throw ValidationError("SFG wavelength must be shorter than signal and pump");
  }
}

SfgTriple SfgTriple::from_signal_pump(double signal_um, double pump_um) {
  return SfgTriple(signal_um, pump_um, sfg_wavelength(signal_um, pump_um));
}

double sfg_wavelength(double signal_um, double pump_um) {
  if (!(signal_um > 0.0)) {
    throw DomainError("signal wavelength must be positive");
  }
  if (!(pump_um > 0.0)) {
    throw DomainError("pump wavelength must be positive");
  }
  return signal_um * pump_um / (signal_um + pump_um);
}

double phase_mismatch(const QpmGrating& grating, const SfgTriple& triple,
                      const SellmeierModel& dispersion) {
  const double d_per_um = index_mismatch_per_um(triple, grating.temperature_c, dispersion);
  // 1/um -> 1/m
  return 2.0 * kPi * (d_per_um - 1.0 / grating.period_um) * 1e6;
}

double solve_qpm_period(const SfgTriple& triple, double temperature_c,
                        const SellmeierModel& dispersion) {
  const double d_per_um = index_mismatch_per_um(triple, temperature_c, dispersion);
  if (!(d_per_um > 0.0)) {
    std::ostringstream msg;
    msg << "no first-order QPM period: index mismatch " << d_per_um << " 1/um is not positive";
    throw NumericError(msg.str());
  }
  return 1.0 / d_per_um;
}

std::vector<TuningPoint> tuning_curve(const QpmGrating& grating, double pump_um,
                                      const std::vector<double>& signal_grid_um,
                                      const SellmeierModel& dispersion) {
  if (signal_grid_um.empty()) {
    throw ValidationError("signal grid must not be empty");
  }
  for (std::size_t i = 1; i < signal_grid_um.size(); ++i) {
    if (!(signal_grid_um[i] > signal_grid_um[i - 1])) {
      throw ValidationError("signal grid must be strictly increasing");
    }
  }
  std::vector<TuningPoint> curve;
  curve.reserve(signal_grid_um.size());
  const double half_length_m = 0.5 * grating.length_m;
  for (double signal_um : signal_grid_um) {
    const auto triple = SfgTriple::from_signal_pump(signal_um, pump_um);
    const double s = sinc(phase_mismatch(grating, triple, dispersion) * half_length_m);
    curve.push_back({signal_um, s * s});
  }
  return curve;
}

double phase_matched_signal(const QpmGrating& grating, double pump_um,
                            const SellmeierModel& dispersion) {
  const double margin = 2.0 * kIndexDerivativeStep;
  const double lo = min_signal_for_validity(pump_um, dispersion) + margin;
  const double hi = dispersion.lambda_max_um - margin;
  if (!(lo < hi)) {
    throw NumericError("empty admissible signal interval for phase matching");
  }
  const auto mismatch = [&](double signal_um) {
    return phase_mismatch(grating, SfgTriple::from_signal_pump(signal_um, pump_um), dispersion);
  };
  // Coarse scan for a sign change, then bisection.
  constexpr int kScanPoints = 512;
  double prev_x = lo;
  double prev_f = mismatch(lo);
  double a = 0.0, b = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / kScanPoints;
    const double f = mismatch(x);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      a = prev_x;
      b = x;
      bracketed = true;
      break;
    }
    prev_x = x;
    prev_f = f;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "no phase-matched signal wavelength in [" << lo << ", " << hi << "] um for period "
        << grating.period_um << " um at " << grating.temperature_c << " C";
    throw NumericError(msg.str());
  }
  double fa = mismatch(a);
  for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
    const double mid = 0.5 * (a + b);
    const double fm = mismatch(mid);
    if (fa * fm <= 0.0) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double pm_bandwidth_fwhm(const QpmGrating& grating, double pump_um,
                         const SellmeierModel& dispersion) {
  const double peak_um = phase_matched_signal(grating, pump_um, dispersion);
  const double half_length_m = 0.5 * grating.length_m;
  const auto response = [&](double signal_um) {
    const auto triple = SfgTriple::from_signal_pump(signal_um, pump_um);
    const double s = sinc(phase_mismatch(grating, triple, dispersion) * half_length_m);
    return s * s;
  };

  // Bracket response = 1/2 on one side of the peak, then bisect.
  const auto half_point = [&](double direction) {
    double step = 1e-4;  // um
    double inner = peak_um;
    double outer = peak_um + direction * step;
    const double limit_lo = min_signal_for_validity(pump_um, dispersion) + 2.0 * kIndexDerivativeStep;
    const double limit_hi = dispersion.lambda_max_um - 2.0 * kIndexDerivativeStep;
    while (response(outer) > 0.5) {
      inner = outer;
      step *= 2.0;
      outer = peak_um + direction * step;
      if (outer < limit_lo || outer > limit_hi) {
        throw NumericError("half-maximum point escapes the dispersion validity range");
      }
    }
    double a = std::min(inner, outer);
    double b = std::max(inner, outer);
    while (b - a > kFwhmTolUm) {
      const double mid = 0.5 * (a + b);
      const bool above = response(mid) > 0.5;
      // The response decreases from the peak outward within the main lobe.
      if ((direction > 0.0) == above) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };

  const double right_um = half_point(+1.0);
  const double left_um = half_point(-1.0);
  return (right_um - left_um) * 1e3;
}

}  // namespace upconv
