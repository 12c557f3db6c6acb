#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "upconv/budget.hpp"
#include "upconv/config.hpp"
#include "upconv/conversion.hpp"
#include "upconv/csv.hpp"
#include "upconv/errors.hpp"
#include "upconv/qpm.hpp"
#include "upconv/raman.hpp"
#include "upconv/sweep.hpp"

namespace {

namespace fs = std::filesystem;
using upconv::format_number;

void print_kv(const std::string& key, double value) {
  std::cout << key << " = " << format_number(value) << "\n";
}

int cmd_pm_curve(const std::string& config_path, const std::string& out_path) {
  const auto config = upconv::load_system_config(config_path);
  const auto dispersion = config.sellmeier();
  const auto grating = config.grating();
  const double pump_um = config.pump_um();

  const double peak_um = upconv::phase_matched_signal(grating, pump_um, dispersion);
  const double center_um =
      config.pm_curve.center_nm > 0.0 ? config.pm_curve.center_nm * 1e-3 : peak_um;
  const double span_um = config.pm_curve.span_nm * 1e-3;
  const int points = config.pm_curve.points;

  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = center_um - 0.5 * span_um + span_um * static_cast<double>(i) / (points - 1);
  }
  const auto curve = upconv::tuning_curve(grating, pump_um, grid, dispersion);

  std::vector<std::vector<double>> rows;
  rows.reserve(curve.size());
  for (const auto& point : curve) {
    rows.push_back({point.signal_um * 1e3, point.response});
  }
  upconv::write_csv(out_path, {"wavelength_nm", "response"}, rows);

  print_kv("peak_signal_nm", peak_um * 1e3);
  print_kv("fwhm_nm", upconv::pm_bandwidth_fwhm(grating, pump_um, dispersion));
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  const auto config = upconv::load_system_config(config_path);
  const auto system = config.detection_system();
  const auto spec = config.sweep();
  const auto model = config.conversion_model();

  fs::create_directories(out_dir);

  std::vector<std::vector<double>> de_rows;
  for (const auto& point : upconv::de_noise_curve(system, spec)) {
    de_rows.push_back({point.power_w, point.system_efficiency, point.noise_rate_cps});
  }
  upconv::write_csv(fs::path(out_dir) / "de_noise.csv", {"power_W", "de", "noise_cps"},
                    de_rows);

  std::vector<std::vector<double>> depletion_rows;
  for (const auto& point : upconv::depletion_curve(model, spec)) {
    depletion_rows.push_back({point.power_w, point.depletion_db});
  }
  upconv::write_csv(fs::path(out_dir) / "depletion.csv", {"power_W", "depletion_dB"},
                    depletion_rows);

  const double p_cal = config.pump_power_mw * 1e-3;
  print_kv("operating_power_W", p_cal);
  print_kv("operating_de", upconv::system_efficiency(system, p_cal));
  print_kv("operating_noise_cps",
           upconv::noise_rate(system.noise, system.conversion, p_cal));
  print_kv("operating_depletion_dB", upconv::signal_depletion_db(model, p_cal));
  return 0;
}

int cmd_fit(const std::string& data_path, const std::string& model_spec) {
  const auto table = upconv::read_two_column_csv(data_path);

  if (model_spec == "sine2") {
    std::vector<upconv::PowerCountSample> samples;
    samples.reserve(table.size());
    for (const auto& row : table) {
      samples.emplace_back(row[0] * 1e-3, row[1], upconv::SampleKind::kEfficiency);
    }
    const auto fit = upconv::fit_sine_squared(samples);
    std::cout << "model = sine2\n";
    print_kv("amplitude", fit.amplitude);
    print_kv("p_peak_mW", fit.p_peak_w * 1e3);
    print_kv("rms_residual", fit.rms_residual);
    return 0;
  }

  if (model_spec.rfind("poly:", 0) == 0) {
    const std::string degree_text = model_spec.substr(5);
    if (degree_text.size() != 1 || degree_text[0] < '0' || degree_text[0] > '3') {
      throw upconv::ValidationError("--model poly:N needs N in 0..3, got '" +
                                    model_spec + "'");
    }
    const int degree = degree_text[0] - '0';
    std::vector<upconv::PowerCountSample> samples;
    samples.reserve(table.size());
    for (const auto& row : table) {
      samples.emplace_back(row[0] * 1e-3, row[1], upconv::SampleKind::kNoise);
    }
    const auto coeffs = upconv::fit_polynomial(samples, degree);
    std::cout << "model = " << model_spec << "\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      print_kv("c" + std::to_string(i), coeffs[i]);
    }
    double sse = 0.0;
    for (const auto& s : samples) {
      double predicted = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        predicted = predicted * s.pump_power_w + coeffs[i];
      }
      const double r = predicted - s.value;
      sse += r * r;
    }
    print_kv("rms_residual", std::sqrt(sse / samples.size()));
    return 0;
  }

  throw upconv::ValidationError("--model must be sine2 or poly:N, got '" + model_spec +
                                "'");
}

int cmd_budget(const std::string& config_path) {
  const auto config = upconv::load_system_config(config_path);
  const auto chain = config.chain();
  const auto model = config.conversion_model();

  double cumulative_db = 0.0;
  for (const auto& element : chain) {
    cumulative_db -= element.loss_db();
    std::cout << "element " << element.name()
              << " loss_db = " << format_number(-element.loss_db())
              << " cumulative_db = " << format_number(cumulative_db) << "\n";
  }
  const double transmission = upconv::chain_transmission(chain);
  const double eta_int = upconv::internal_efficiency(model, model.p_peak_w);
  print_kv("chain_db", cumulative_db);
  print_kv("chain_transmission", transmission);
  print_kv("eta_int_at_p_peak", eta_int);
  print_kv("detector_efficiency", config.detector_efficiency);
  print_kv("eta_sys_at_p_peak", transmission * eta_int * config.detector_efficiency);
  return 0;
}

int cmd_noise_ratio(double lambda_a_um, double lambda_b_um, double temperature_k) {
  const double ratio =
      upconv::anti_stokes_stokes_ratio(lambda_a_um, lambda_b_um, temperature_k);
  print_kv("ratio", ratio);
  print_kv("reciprocal", 1.0 / ratio);
  return 0;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 3;
  } catch (const upconv::IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 3;
  } catch (const upconv::ResourceError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const upconv::NumericError& e) {
    std::cerr << "error: numeric: " << e.what() << "\n";
    return 4;
  } catch (const upconv::ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const upconv::DomainError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forward model for a frequency-upconversion single-photon detector"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string data_path;
  std::string model_spec;
  double lambda_a_um = 0.0;
  double lambda_b_um = 0.0;
  double temperature_k = 0.0;

  auto* pm = app.add_subcommand("pm-curve",
                                "Write the tuning curve CSV and print the FWHM");
  pm->add_option("--config", config_path, "System config file")->required();
  pm->add_option("--out", out_path, "Output CSV path")->required();

  auto* sim = app.add_subcommand(
      "simulate", "Write DE/noise and depletion sweep CSVs into a directory");
  sim->add_option("--config", config_path, "System config file")->required();
  sim->add_option("--out", out_path, "Output directory")->required();

  auto* fit = app.add_subcommand("fit", "Fit a model to two-column (power_mW, value) data");
  fit->add_option("--data", data_path, "Input CSV")->required();
  fit->add_option("--model", model_spec, "sine2 or poly:N (N <= 3)")->required();

  auto* budget = app.add_subcommand("budget", "Print the loss budget report");
  budget->add_option("--config", config_path, "System config file")->required();

  auto* ratio = app.add_subcommand(
      "noise-ratio", "Print the anti-Stokes/Stokes ratio for two pump wavelengths");
  ratio->add_option("lambda_a_um", lambda_a_um, "Longer pump wavelength, um")->required();
  ratio->add_option("lambda_b_um", lambda_b_um, "Shorter pump wavelength, um")->required();
  ratio->add_option("temperature_K", temperature_k, "Medium temperature, K")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  if (pm->parsed()) {
    return run_guarded([&] { return cmd_pm_curve(config_path, out_path); });
  }
  if (sim->parsed()) {
    return run_guarded([&] { return cmd_simulate(config_path, out_path); });
  }
  if (fit->parsed()) {
    return run_guarded([&] { return cmd_fit(data_path, model_spec); });
  }
  if (budget->parsed()) {
    return run_guarded([&] { return cmd_budget(config_path); });
  }
  if (ratio->parsed()) {
    return run_guarded(
        [&] { return cmd_noise_ratio(lambda_a_um, lambda_b_um, temperature_k); });
  }
  return 2;
}
