#include "upconv/budget.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "upconv/errors.hpp"

namespace upconv {

double db_to_fraction(double db) {
  if (db > 0.0) {
    throw DomainError("attenuation must be <= 0 dB; positive dB would be gain");
  }
  return std::pow(10.0, db / 10.0);
}

double fraction_to_db(double fraction) {
  if (!(fraction > 0.0)) {
    throw DomainError("transmission fraction must be > 0");
  }
  if (fraction > 1.0) {
    throw DomainError("transmission fraction must be <= 1");
  }
  return 10.0 * std::log10(fraction);
}

LossElement::LossElement(std::string name, double loss_db)
    : name_(std::move(name)), loss_db_(loss_db) {}

LossElement LossElement::from_loss_db(std::string name, double loss_db) {
  if (name.empty()) {
    throw ValidationError("loss element needs a name");
  }
  if (!(loss_db >= 0.0)) {
    std::ostringstream msg;
    msg << "loss element '" << name << "': attenuation must be >= 0 dB, got " << loss_db;
    throw ValidationError(msg.str());
  }
  return LossElement(std::move(name), loss_db);
}

LossElement LossElement::from_efficiency(std::string name, double efficiency) {
  if (name.empty()) {
    throw ValidationError("loss element needs a name");
  }
  if (!(efficiency > 0.0) || !(efficiency <= 1.0)) {
    std::ostringstream msg;
    msg << "loss element '" << name << "': efficiency must lie in (0, 1], got "
        << efficiency;
    throw ValidationError(msg.str());
  }
  return LossElement(std::move(name), -10.0 * std::log10(efficiency));
}

double LossElement::efficiency() const { return std::pow(10.0, -loss_db_ / 10.0); }

double chain_transmission(const std::vector<LossElement>& chain) {
  if (chain.empty()) {
    throw ValidationError("loss chain must not be empty");
  }
  double transmission = 1.0;
  for (const auto& element : chain) {
    const double eff = element.efficiency();
    if (!(eff > 0.0) || !(eff <= 1.0)) {
      std::ostringstream msg;
      msg << "loss element '" << element.name() << "' has efficiency " << eff
          << " outside (0, 1]";
      throw ValidationError(msg.str());
    }
    transmission *= eff;
  }
  return transmission;
}

DetectionSystem::DetectionSystem(std::vector<LossElement> chain,
                                 ConversionModel conversion,
                                 double detector_efficiency, RamanConfig noise)
    : chain(std::move(chain)),
      conversion(conversion),
      detector_efficiency(detector_efficiency),
      noise(noise) {
  if (this->chain.empty()) {
    throw ValidationError("detection system needs a non-empty loss chain");
  }
  if (!(detector_efficiency > 0.0) || !(detector_efficiency <= 1.0)) {
    throw ValidationError("detector efficiency must lie in (0, 1]");
  }
}

double system_efficiency(const DetectionSystem& system, double pump_power_w) {
  return chain_transmission(system.chain) *
         internal_efficiency(system.conversion, pump_power_w) *
         system.detector_efficiency;
}

}  // namespace upconv
