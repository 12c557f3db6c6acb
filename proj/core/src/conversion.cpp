#include "upconv/conversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "upconv/errors.hpp"

namespace upconv {

namespace {

constexpr double kPi = std::numbers::pi;

double sine_squared(double pump_power_w, double p_peak_w) {
  const double theta = 0.5 * kPi * std::sqrt(pump_power_w / p_peak_w);
  const double s = std::sin(theta);
  return s * s;
}

// Solves the symmetric 2x2 system m x = rhs in place; false when singular.
bool solve2x2(const std::array<std::array<double, 2>, 2>& m,
              const std::array<double, 2>& rhs, std::array<double, 2>& x) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double scale = std::max({std::abs(m[0][0]), std::abs(m[0][1]),
                                 std::abs(m[1][0]), std::abs(m[1][1])});
  if (!(std::abs(det) > 1e-14 * scale * scale)) {
    return false;
  }
  x[0] = (rhs[0] * m[1][1] - rhs[1] * m[0][1]) / det;
  x[1] = (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det;
  return true;
}

struct StartResult {
  double amplitude = 0.0;
  double p_peak_w = 0.0;
  double sse = std::numeric_limits<double>::infinity();
  bool converged = false;
};

StartResult run_damped_fit(const std::vector<PowerCountSample>& samples,
                           double amplitude0, double p0) {
  constexpr int kMaxIterations = 10000;
  constexpr double kRelTol = 1e-9;

  const auto sse_at = [&](double a, double p) {
    double sse = 0.0;
    for (const auto& s : samples) {
      const double r = a * sine_squared(s.pump_power_w, p) - s.value;
      sse += r * r;
    }
    return sse;
  };

  StartResult best;
  double a = amplitude0;
  double p = p0;
  double sse = sse_at(a, p);
  double damping = 1e-3;

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::array<std::array<double, 2>, 2> jtj{{{0.0, 0.0}, {0.0, 0.0}}};
    std::array<double, 2> jtr{0.0, 0.0};
    for (const auto& s : samples) {
      const double theta = 0.5 * kPi * std::sqrt(s.pump_power_w / p);
      const double sin_th = std::sin(theta);
      const double model = a * sin_th * sin_th;
      const double r = model - s.value;
      const double da = sin_th * sin_th;
      const double dp = -a * std::sin(2.0 * theta) * theta / (2.0 * p);
      jtj[0][0] += da * da;
      jtj[0][1] += da * dp;
      jtj[1][1] += dp * dp;
      jtr[0] += da * r;
      jtr[1] += dp * r;
    }
    jtj[1][0] = jtj[0][1];

    bool stepped = false;
    for (int attempt = 0; attempt < 60; ++attempt) {
      auto damped = jtj;
      damped[0][0] += damping * std::max(jtj[0][0], 1e-30);
      damped[1][1] += damping * std::max(jtj[1][1], 1e-30);
      std::array<double, 2> delta{};
      if (!solve2x2(damped, {-jtr[0], -jtr[1]}, delta)) {
        damping *= 10.0;
        continue;
      }
      const double a_new = a + delta[0];
      const double p_new = p + delta[1];
      if (!(p_new > 0.0) || !std::isfinite(a_new)) {
        damping *= 10.0;
        continue;
      }
      const double sse_new = sse_at(a_new, p_new);
      if (sse_new <= sse) {
        const double rel = std::max(std::abs(delta[0]) / std::max(std::abs(a_new), 1e-300),
                                    std::abs(delta[1]) / std::max(std::abs(p_new), 1e-300));
        a = a_new;
        p = p_new;
        sse = sse_new;
        damping = std::max(damping / 3.0, 1e-12);
        stepped = true;
        if (rel < kRelTol) {
          best = {a, p, sse, true};
          return best;
        }
        break;
      }
      damping *= 10.0;
    }
    if (!stepped) {
      // Damping saturated: the step has collapsed below the tolerance.
      best = {a, p, sse, true};
      return best;
    }
  }
  best = {a, p, sse, false};
  return best;
}

}  // namespace

ConversionModel::ConversionModel(double eta_max, double p_peak_w, double length_m)
    : eta_max(eta_max), p_peak_w(p_peak_w), length_m(length_m) {
  if (!(eta_max > 0.0) || !(eta_max <= 1.0)) {
    throw ValidationError("eta_max must lie in (0, 1]");
  }
  if (!(p_peak_w > 0.0)) {
    throw ValidationError("p_peak must be > 0 W");
  }
  if (!(length_m > 0.0)) {
    throw ValidationError("interaction length must be > 0 m");
  }
}

double ConversionModel::normalized_efficiency() const {
  return kPi * kPi / (4.0 * p_peak_w * length_m * length_m);
}

PowerCountSample::PowerCountSample(double pump_power_w, double value, SampleKind kind)
    : pump_power_w(pump_power_w), value(value), kind(kind) {
  if (!(pump_power_w >= 0.0)) {
    throw ValidationError("sample pump power must be >= 0 W");
  }
  if (!(value >= 0.0)) {
    throw ValidationError("sample value must be >= 0");
  }
}

double internal_efficiency(const ConversionModel& model, double pump_power_w) {
  if (!(pump_power_w >= 0.0)) {
    throw DomainError("pump power must be >= 0 W");
  }
  return model.eta_max * sine_squared(pump_power_w, model.p_peak_w);
}

double signal_depletion_db(const ConversionModel& model, double pump_power_w) {
  const double eta = internal_efficiency(model, pump_power_w);
  if (eta >= 1.0) {
    // Complete depletion: no transmitted signal at all.
    return -std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(1.0 - eta);
}

double conversion_from_depletion(double depletion_db) {
  if (depletion_db > 0.0) {
    throw DomainError("depletion must be <= 0 dB; the transmitted signal cannot gain");
  }
  return 1.0 - std::pow(10.0, depletion_db / 10.0);
}

SineSquaredFit fit_sine_squared(const std::vector<PowerCountSample>& samples) {
  if (samples.size() < 3) {
    throw FitError("sine-squared fit needs at least 3 samples");
  }
  std::set<double> distinct_positive;
  double max_power = 0.0;
  double max_value = 0.0;
  for (const auto& s : samples) {
    if (s.kind != SampleKind::kEfficiency) {
      throw ValidationError("sine-squared fit expects efficiency samples");
    }
    if (s.pump_power_w > 0.0) {
      distinct_positive.insert(s.pump_power_w);
    }
    max_power = std::max(max_power, s.pump_power_w);
    max_value = std::max(max_value, s.value);
  }
  if (distinct_positive.size() < 2) {
    throw FitError("sine-squared fit needs at least 2 distinct positive powers");
  }

  const double amplitude0 = max_value > 0.0 ? max_value : 1.0;
  const std::array<double, 4> starts = {max_power / 4.0, max_power / 2.0, max_power,
                                        2.0 * max_power};

  StartResult best;
  bool any_converged = false;
  double best_sse_overall = std::numeric_limits<double>::infinity();
  for (double p0 : starts) {
    const StartResult r = run_damped_fit(samples, amplitude0, p0);
    best_sse_overall = std::min(best_sse_overall, r.sse);
    if (r.converged && r.sse < best.sse) {
      best = r;
      any_converged = true;
    }
  }
  if (!any_converged) {
    std::ostringstream msg;
    msg << "sine-squared fit did not converge within 10000 iterations per start; "
        << "best rms residual " << std::sqrt(best_sse_overall / samples.size());
    throw FitError(msg.str());
  }
  return {best.amplitude, best.p_peak_w,
          std::sqrt(best.sse / static_cast<double>(samples.size()))};
}

std::vector<double> fit_polynomial(const std::vector<PowerCountSample>& samples,
                                   int degree) {
  if (degree < 0 || degree > 3) {
    throw ValidationError("polynomial degree must lie in [0, 3]");
  }
  if (samples.size() <= static_cast<std::size_t>(degree)) {
    throw FitError("polynomial fit needs more samples than the degree");
  }

  const int n = degree + 1;
  // Normal equations of the Vandermonde system, then Gaussian elimination
  // with partial pivoting. Degree <= 3 keeps this well within double range.
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (const auto& s : samples) {
    std::array<double, 4> powers{1.0, 0.0, 0.0, 0.0};
    for (int k = 1; k < n; ++k) {
      powers[k] = powers[k - 1] * s.pump_power_w;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m[i][j] += powers[i] * powers[j];
      }
      m[i][n] += powers[i] * s.value;
    }
  }

  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      scale = std::max(scale, std::abs(m[i][j]));
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) {
        pivot = row;
      }
    }
    if (!(std::abs(m[pivot][col]) > 1e-12 * scale)) {
      throw FitError("polynomial fit is rank deficient; need degree+1 distinct powers");
    }
    std::swap(m[col], m[pivot]);
    for (int row = col + 1; row < n; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (int j = col; j <= n; ++j) {
        m[row][j] -= factor * m[col][j];
      }
    }
  }
  std::vector<double> coeffs(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double acc = m[i][n];
    for (int j = i + 1; j < n; ++j) {
      acc -= m[i][j] * coeffs[j];
    }
    coeffs[i] = acc / m[i][i];
  }
  return coeffs;
}

}  // namespace upconv
