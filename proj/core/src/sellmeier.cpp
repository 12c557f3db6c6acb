#include "upconv/sellmeier.hpp"

#include <cmath>
#include <sstream>

#include "upconv/errors.hpp"

namespace upconv {

namespace {

double temperature_parameter(double temperature_c) {
  return (temperature_c - 24.5) * (temperature_c + 570.82);
}

void check_temperature(const SellmeierModel& model, double temperature_c) {
  if (!(temperature_c >= model.temp_min_c && temperature_c <= model.temp_max_c)) {
    std::ostringstream msg;
    msg << "temperature " << temperature_c << " C outside validity range [" << model.temp_min_c
        << ", " << model.temp_max_c << "] C of " << model.reference;
    throw DomainError(msg.str());
  }
}

void check_wavelength(const SellmeierModel& model, double wavelength_um, double margin_um) {
  if (!(wavelength_um - margin_um >= model.lambda_min_um &&
        wavelength_um + margin_um <= model.lambda_max_um)) {
    std::ostringstream msg;
    msg << "wavelength " << wavelength_um << " um outside validity range ["
        << model.lambda_min_um << ", " << model.lambda_max_um << "] um of " << model.reference;
    if (margin_um > 0.0) {
      msg << " (a margin of " << margin_um << " um is required by the derivative stencil)";
    }
    throw DomainError(msg.str());
  }
}

double band_offset(const SellmeierModel& model, double wavelength_um) {
  double dn = 0.0;
  for (const auto& band : model.offsets) {
    if (wavelength_um >= band.lambda_min_um && wavelength_um <= band.lambda_max_um) {
      dn += band.delta_n;
    }
  }
  return dn;
}

// n^2 of the bulk model, no offsets, no range checks.
double index_squared(const SellmeierModel& m, double l, double f) {
  const double pole_uv = m.a3 + m.b3 * f;
  return m.a1 + m.b1 * f + (m.a2 + m.b2 * f) / (l * l - pole_uv * pole_uv) +
         (m.a4 + m.b4 * f) / (l * l - m.a5 * m.a5) - m.a6 * l * l;
}

// d(n^2)/dlambda: only the lambda-dependent terms survive.
double index_squared_derivative(const SellmeierModel& m, double l, double f) {
  const double pole_uv = m.a3 + m.b3 * f;
  const double den_uv = l * l - pole_uv * pole_uv;
  const double den_ir = l * l - m.a5 * m.a5;
  return -2.0 * l * (m.a2 + m.b2 * f) / (den_uv * den_uv) -
         2.0 * l * (m.a4 + m.b4 * f) / (den_ir * den_ir) - 2.0 * m.a6 * l;
}

}  // namespace

SellmeierModel SellmeierModel::congruent_linbo3_e() {
  SellmeierModel m;
  m.a1 = 5.35583;
  m.a2 = 0.100473;
  m.a3 = 0.20692;
  m.a4 = 100.0;
  m.a5 = 11.34927;
  m.a6 = 1.5334e-2;
  m.b1 = 4.629e-7;
  m.b2 = 3.862e-8;
  m.b3 = -0.89e-8;
  m.b4 = 2.657e-5;
  m.lambda_min_um = 0.4;
  m.lambda_max_um = 5.0;
  m.temp_min_c = 20.0;
  m.temp_max_c = 200.0;
  m.reference = "D. H. Jundt, Opt. Lett. 22, 1553 (1997), congruent LiNbO3 n_e";
  return m;
}

double refractive_index(const SellmeierModel& model, double wavelength_um, double temperature_c) {
  check_wavelength(model, wavelength_um, 0.0);
  check_temperature(model, temperature_c);
  const double f = temperature_parameter(temperature_c);
  const double n2 = index_squared(model, wavelength_um, f);
  if (!(n2 > 1.0)) {
    std::ostringstream msg;
    msg << "index squared " << n2 << " not > 1 at " << wavelength_um << " um, " << temperature_c
        << " C; coefficient set " << model.reference << " is unphysical here";
    throw DomainError(msg.str());
  }
  return std::sqrt(n2) + band_offset(model, wavelength_um);
}

double index_derivative(const SellmeierModel& model, double wavelength_um, double temperature_c,
                        DerivativeMethod method) {
  check_temperature(model, temperature_c);
  if (method == DerivativeMethod::kCentralDifference) {
    const double h = kIndexDerivativeStep;
    check_wavelength(model, wavelength_um, h);
    return (refractive_index(model, wavelength_um + h, temperature_c) -
            refractive_index(model, wavelength_um - h, temperature_c)) /
           (2.0 * h);
  }
  // Analytic: dn/dl = (dn^2/dl) / (2n). Requires the open interval so both
  // routes share one "strictly inside" contract.
  if (!(wavelength_um > model.lambda_min_um && wavelength_um < model.lambda_max_um)) {
    check_wavelength(model, wavelength_um, kIndexDerivativeStep);
  }
  const double f = temperature_parameter(temperature_c);
  const double n_bulk = std::sqrt(index_squared(model, wavelength_um, f));
  return index_squared_derivative(model, wavelength_um, f) / (2.0 * n_bulk);
}

double group_index(const SellmeierModel& model, double wavelength_um, double temperature_c,
                   DerivativeMethod method) {
  return refractive_index(model, wavelength_um, temperature_c) -
         wavelength_um * index_derivative(model, wavelength_um, temperature_c, method);
}

}  // namespace upconv
