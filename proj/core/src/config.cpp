#include "upconv/config.hpp"

#include <climits>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "upconv/constants.hpp"
#include "upconv/errors.hpp"
#include "upconv/raman.hpp"

namespace upconv {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(trim(value.substr(start)));
      return parts;
    }
    parts.push_back(trim(value.substr(start, comma - start)));
    start = comma + 1;
  }
}

class Parser {
 public:
  Parser(const std::string& text, const std::string& source_name)
      : text_(text), source_(source_name) {}

  SystemConfig run() {
    std::istringstream in(text_);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string line = raw;
      const auto comment = line.find_first_of("#;");
      if (comment != std::string::npos) {
        line = line.substr(0, comment);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail("unterminated section header");
        }
        enter_section(trim(line.substr(1, line.size() - 2)));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail("expected 'key = value'");
      }
      handle(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    config_.validate();
    return config_;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << source_ << ":" << line_ << ": " << what;
    throw ValidationError(msg.str());
  }

  void enter_section(const std::string& name) {
    static const std::set<std::string> known = {
        "grating", "wavelengths", "conversion", "chain",    "detector",
        "noise",   "source",      "sweep",      "pm_curve", "sellmeier"};
    if (!known.count(name)) {
      fail("unknown section [" + name + "]");
    }
    section_ = name;
  }

  double number(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double parsed = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      fail("key '" + key + "' needs a number, got '" + value + "'");
    }
    return parsed;
  }

  int integer(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const long parsed = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0' || parsed < INT_MIN || parsed > INT_MAX) {
      fail("key '" + key + "' needs an integer, got '" + value + "'");
    }
    return static_cast<int>(parsed);
  }

  // Scalar keys may appear once; returns the target for the value.
  double* scalar(const std::string& key, std::initializer_list<
                     std::pair<const char*, double*>> slots) {
    for (const auto& [name, target] : slots) {
      if (key == name) {
        mark_seen(key);
        return target;
      }
    }
    return nullptr;
  }

  void mark_seen(const std::string& key) {
    if (!seen_.insert(section_ + "." + key).second) {
      fail("duplicate key '" + key + "' in section [" + section_ + "]");
    }
  }

  void handle(const std::string& key, const std::string& value) {
    if (section_.empty()) {
      fail("key '" + key + "' appears before any [section]");
    }
    if (section_ == "grating") {
      if (auto* t = scalar(key, {{"length_mm", &config_.grating_length_mm},
                                 {"period_um", &config_.grating_period_um},
                                 {"temperature_C", &config_.grating_temperature_c}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "wavelengths") {
      if (auto* t = scalar(key, {{"signal_nm", &config_.signal_nm},
                                 {"pump_nm", &config_.pump_nm}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "conversion") {
      if (auto* t = scalar(key, {{"eta_max", &config_.eta_max},
                                 {"p_peak_mW", &config_.p_peak_mw}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "chain") {
      if (key == "element") {
        const auto parts = split_list(value);
        if (parts.size() != 2 || parts[0].empty()) {
          fail("element needs 'name, loss_db'");
        }
        const double loss_db = number(key, parts[1]);
        if (loss_db > 0.0) {
          fail("chain losses are written as non-positive dB; got " + parts[1]);
        }
        if (!chain_overridden_) {
          config_.chain_elements.clear();
          chain_overridden_ = true;
        }
        config_.chain_elements.emplace_back(parts[0], loss_db);
        return;
      }
    } else if (section_ == "detector") {
      if (auto* t = scalar(key, {{"efficiency", &config_.detector_efficiency},
                                 {"dark_cps", &config_.dark_cps}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "noise") {
      if (auto* t = scalar(key, {{"pump_power_mW", &config_.pump_power_mw},
                                 {"measured_noise_cps", &config_.measured_noise_cps}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "source") {
      if (auto* t = scalar(key, {{"photon_rate_hz", &config_.photon_rate_hz},
                                 {"gate_ns", &config_.gate_ns},
                                 {"gate_rate_hz", &config_.gate_rate_hz}})) {
        *t = number(key, value);
        return;
      }
    } else if (section_ == "sweep") {
      if (auto* t = scalar(key, {{"min_mW", &config_.sweep_min_mw},
                                 {"max_mW", &config_.sweep_max_mw}})) {
        *t = number(key, value);
        return;
      }
      if (key == "points") {
        mark_seen(key);
        config_.sweep_points = integer(key, value);
        return;
      }
      if (key == "objective") {
        mark_seen(key);
        if (value == "max_de") {
          config_.sweep_objective = SweepObjective::kMaxDe;
        } else if (value == "max_snr") {
          config_.sweep_objective = SweepObjective::kMaxSnr;
        } else if (value == "min_nep") {
          config_.sweep_objective = SweepObjective::kMinNep;
        } else {
          fail("objective must be max_de, max_snr, or min_nep; got '" + value + "'");
        }
        return;
      }
    } else if (section_ == "pm_curve") {
      if (auto* t = scalar(key, {{"span_nm", &config_.pm_curve.span_nm},
                                 {"center_nm", &config_.pm_curve.center_nm}})) {
        *t = number(key, value);
        return;
      }
      if (key == "points") {
        mark_seen(key);
        config_.pm_curve.points = integer(key, value);
        return;
      }
    } else if (section_ == "sellmeier") {
      if (key == "offset") {
        const auto parts = split_list(value);
        if (parts.size() != 3) {
          fail("offset needs 'lambda_min_um, lambda_max_um, delta_n'");
        }
        config_.sellmeier_offsets.push_back({number(key, parts[0]),
                                             number(key, parts[1]),
                                             number(key, parts[2])});
        return;
      }
    }
    fail("unknown key '" + key + "' in section [" + section_ + "]");
  }

  const std::string& text_;
  std::string source_;
  std::string section_;
  std::size_t line_ = 0;
  std::set<std::string> seen_;
  bool chain_overridden_ = false;
  SystemConfig config_;
};

}  // namespace

SellmeierModel SystemConfig::sellmeier() const {
  SellmeierModel model = SellmeierModel::congruent_linbo3_e();
  for (const auto& offset : sellmeier_offsets) {
    if (!(offset.lambda_min_um < offset.lambda_max_um)) {
      throw ValidationError("sellmeier offset band must have lambda_min < lambda_max");
    }
    model.offsets.push_back(offset);
  }
  return model;
}

QpmGrating SystemConfig::grating() const {
  return QpmGrating(grating_length_mm * 1e-3, grating_period_um, grating_temperature_c);
}

ConversionModel SystemConfig::conversion_model() const {
  return ConversionModel(eta_max, p_peak_mw * 1e-3, grating_length_mm * 1e-3);
}

std::vector<LossElement> SystemConfig::chain() const {
  std::vector<LossElement> elements;
  elements.reserve(chain_elements.size());
  for (const auto& [name, loss_db] : chain_elements) {
    elements.push_back(LossElement::from_loss_db(name, -loss_db));
  }
  return elements;
}

RamanConfig SystemConfig::raman() const {
  const RamanConfig uncalibrated(pump_um(), signal_um(),
                                 celsius_to_kelvin(grating_temperature_c), 0.0,
                                 dark_cps);
  const double kappa = calibrate_noise_coefficient(
      uncalibrated, conversion_model(), pump_power_mw * 1e-3, measured_noise_cps);
  return RamanConfig(pump_um(), signal_um(), celsius_to_kelvin(grating_temperature_c),
                     kappa, dark_cps);
}

DetectionSystem SystemConfig::detection_system() const {
  return DetectionSystem(chain(), conversion_model(), detector_efficiency, raman());
}

GatedSource SystemConfig::source() const {
  return GatedSource(photon_rate_hz, gate_ns * 1e-9, gate_rate_hz);
}

SweepSpec SystemConfig::sweep() const {
  return SweepSpec(sweep_min_mw * 1e-3, sweep_max_mw * 1e-3, sweep_points,
                   sweep_objective);
}

void SystemConfig::validate() const {
  sellmeier();
  grating();
  conversion_model();
  chain_transmission(chain());
  detection_system();
  source();
  sweep();
  SfgTriple::from_signal_pump(signal_um(), pump_um());
  if (!(pm_curve.span_nm > 0.0)) {
    throw ValidationError("pm_curve span_nm must be > 0");
  }
  if (pm_curve.points < 2) {
    throw ValidationError("pm_curve points must be >= 2");
  }
  if (!(pm_curve.center_nm >= 0.0)) {
    throw ValidationError("pm_curve center_nm must be >= 0 (0 = auto)");
  }
}

SystemConfig parse_system_config(const std::string& text,
                                 const std::string& source_name) {
  return Parser(text, source_name).run();
}

SystemConfig load_system_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system_config(buffer.str(), path.string());
}

}  // namespace upconv
