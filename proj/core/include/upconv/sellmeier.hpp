#pragma once

#include <string>
#include <vector>

namespace upconv {

// Constant index increment applied on a wavelength band [min, max] um, on top
// of the bulk substrate model. Used to absorb waveguide (mode) dispersion that
// the bulk Sellmeier cannot represent; all bands default to zero.
struct IndexBandOffset {
  double lambda_min_um;
  double lambda_max_um;
  double delta_n;
};

// Temperature-dependent Sellmeier model for the extraordinary ray,
//
//   n^2 = a1 + b1 f + (a2 + b2 f) / (l^2 - (a3 + b3 f)^2)
//       + (a4 + b4 f) / (l^2 - a5^2) - a6 l^2,
//
// with l the vacuum wavelength in um and f = (T - 24.5)(T + 570.82), T in C.
struct SellmeierModel {
  double a1, a2, a3, a4, a5, a6;
  double b1, b2, b3, b4;
  double lambda_min_um;  // validity range, inclusive
  double lambda_max_um;
  double temp_min_c;
  double temp_max_c;
  std::string reference;                 // provenance of the coefficient set
  std::vector<IndexBandOffset> offsets;  // default: none (bulk substrate)

  // Congruent LiNbO3, extraordinary ray. Coefficients from
  // D. H. Jundt, Opt. Lett. 22, 1553 (1997).
  static SellmeierModel congruent_linbo3_e();
};

enum class DerivativeMethod { kAnalytic, kCentralDifference };

// Step used by the central-difference stencil, um.
inline constexpr double kIndexDerivativeStep = 1e-5;

// Extraordinary index n_e(lambda, T). Throws DomainError when lambda or T is
// outside the model's validity, naming the offending argument.
double refractive_index(const SellmeierModel& model, double wavelength_um, double temperature_c);

// dn/dlambda in 1/um. Band offsets are constant in lambda and do not
// contribute. The analytic route needs lambda strictly inside the validity
// range; the central-difference route additionally needs lambda +/- step.
double index_derivative(const SellmeierModel& model, double wavelength_um, double temperature_c,
                        DerivativeMethod method = DerivativeMethod::kAnalytic);

// Group index n_g = n - lambda dn/dlambda.
double group_index(const SellmeierModel& model, double wavelength_um, double temperature_c,
                   DerivativeMethod method = DerivativeMethod::kAnalytic);

}  // namespace upconv
