#pragma once

#include <string>
#include <vector>

#include "upconv/conversion.hpp"
#include "upconv/raman.hpp"

namespace upconv {

// Attenuation convention: reports and config files carry losses as
// non-positive dB (a "-4.5 dB throughput"); db_to_fraction takes that form.
// LossElement stores the positive attenuation internally.
double db_to_fraction(double db);
double fraction_to_db(double fraction);

class LossElement {
 public:
  // loss_db is positive attenuation, so a "-4.5 dB" element is from_loss_db(4.5).
  static LossElement from_loss_db(std::string name, double loss_db);
  static LossElement from_efficiency(std::string name, double efficiency);

  const std::string& name() const { return name_; }
  double loss_db() const { return loss_db_; }
  double efficiency() const;

 private:
  LossElement(std::string name, double loss_db);

  std::string name_;
  double loss_db_;
};

// Product of element efficiencies, equivalently 10^(-sum(loss_db)/10).
double chain_transmission(const std::vector<LossElement>& chain);

// Everything between the input fiber and the click: passive chain, the
// pump-dependent waveguide conversion, the final detector, and the noise
// channel riding along.
struct DetectionSystem {
  std::vector<LossElement> chain;
  ConversionModel conversion;
  double detector_efficiency;
  RamanConfig noise;

  DetectionSystem(std::vector<LossElement> chain, ConversionModel conversion,
                  double detector_efficiency, RamanConfig noise);
};

// eta_sys(P) = chain_transmission * eta_int(P) * detector_efficiency.
double system_efficiency(const DetectionSystem& system, double pump_power_w);

}  // namespace upconv
