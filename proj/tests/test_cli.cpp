// Drives the installed-style binary end to end through std::system; the
// binary path and shipped config directory arrive as compile definitions.
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

class CliRun : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "upconv_cli_test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }

  CliResult run(const std::string& args) const {
    const fs::path out_file = dir_ / "stdout.txt";
    const fs::path err_file = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + UPCONV_CLI_PATH + "\" " +
                            args + " > \"" + out_file.string() + "\" 2> \"" +
                            err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
  }

  // Pulls the number out of a "key = value" stdout line.
  static double value_of(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    EXPECT_NE(pos, std::string::npos) << key << " missing in:\n" << text;
    if (pos == std::string::npos) return NAN;
    return std::strtod(text.c_str() + pos + key.size() + 3, nullptr);
  }

  static std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += (c == '\n');
    return n;
  }

  fs::path reference_config() const {
    return fs::path(UPCONV_CONFIG_DIR) / "reference.ini";
  }

  fs::path dir_;
};

TEST_F(CliRun, NoiseRatioPrintsRatioAndReciprocal) {
  const auto r = run("noise-ratio 1.95 1.55 333.15");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("ratio = 0.00656051831"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reciprocal = 152.426981"), std::string::npos) << r.out;
}

TEST_F(CliRun, NoiseRatioRejectsEqualWavelengths) {
  const auto r = run("noise-ratio 1.55 1.55 300");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("error: validation:"), std::string::npos) << r.err;
}

TEST_F(CliRun, MissingConfigIsIoFailure) {
  const auto r = run("budget --config /nonexistent/nope.ini");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("error: io:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("/nonexistent/nope.ini"), std::string::npos) << r.err;
}

TEST_F(CliRun, BudgetReportIsSelfConsistent) {
  const auto r = run("budget --config \"" + reference_config().string() + "\"");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("element waveguide_throughput"), std::string::npos);
  EXPECT_NE(r.out.find("element wdm"), std::string::npos);
  EXPECT_NE(r.out.find("element free_space_path"), std::string::npos);
  EXPECT_NEAR(value_of(r.out, "chain_db"), -6.3, 1e-9);
  EXPECT_NEAR(value_of(r.out, "chain_transmission"), 0.234422881531992, 1e-9);
  EXPECT_NEAR(value_of(r.out, "eta_sys_at_p_peak"), 0.105019089, 1e-8);
  EXPECT_NEAR(value_of(r.out, "chain_transmission") *
                  value_of(r.out, "eta_int_at_p_peak") *
                  value_of(r.out, "detector_efficiency"),
              value_of(r.out, "eta_sys_at_p_peak"), 1e-9);
}

TEST_F(CliRun, PmCurveWritesCsvAndBandwidth) {
  const fs::path csv = dir_ / "pm.csv";
  const auto r = run("pm-curve --config \"" + reference_config().string() +
                     "\" --out \"" + csv.string() + "\"");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out, "peak_signal_nm"), 1605.37, 0.01);
  const double fwhm = value_of(r.out, "fwhm_nm");
  EXPECT_GT(fwhm, 0.15);
  EXPECT_LT(fwhm, 0.6);
  const std::string body = slurp(csv);
  EXPECT_EQ(count_lines(body), 202u);  // header + 201 samples
  EXPECT_EQ(body.rfind("wavelength_nm,response\n", 0), 0u) << body.substr(0, 40);
}

TEST_F(CliRun, SimulatePrintsOperatingPointAndWritesSweeps) {
  const fs::path out_dir = dir_ / "sim";
  const auto r = run("simulate --config \"" + reference_config().string() +
                     "\" --out \"" + out_dir.string() + "\"");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out, "operating_power_W"), 0.3, 1e-12);
  EXPECT_NEAR(value_of(r.out, "operating_de"), 0.105019089, 1e-8);
  EXPECT_NEAR(value_of(r.out, "operating_noise_cps"), 24500.0, 1e-6);
  EXPECT_NEAR(value_of(r.out, "operating_depletion_dB"), -23.5, 1e-8);
  EXPECT_EQ(count_lines(slurp(out_dir / "de_noise.csv")), 242u);
  EXPECT_EQ(count_lines(slurp(out_dir / "depletion.csv")), 242u);
}

TEST_F(CliRun, SimulateOutputIsByteDeterministic) {
  const fs::path first = dir_ / "sim1";
  const fs::path second = dir_ / "sim2";
  const std::string config = reference_config().string();
  ASSERT_EQ(run("simulate --config \"" + config + "\" --out \"" +
                first.string() + "\"").exit_code, 0);
  ASSERT_EQ(run("simulate --config \"" + config + "\" --out \"" +
                second.string() + "\"").exit_code, 0);
  EXPECT_EQ(slurp(first / "de_noise.csv"), slurp(second / "de_noise.csv"));
  EXPECT_EQ(slurp(first / "depletion.csv"), slurp(second / "depletion.csv"));
}

TEST_F(CliRun, FitRecoversSineSquaredParameters) {
  const fs::path data = dir_ / "efficiency.csv";
  std::ofstream out(data);
  out << "power_mW,efficiency\n" << std::setprecision(17);
  for (int i = 1; i <= 10; ++i) {
    const double p_mw = 60.0 * i;
    const double theta =
        std::numbers::pi / 2.0 * std::sqrt(p_mw / 300.0);
    out << p_mw << "," << 0.1025 * std::sin(theta) * std::sin(theta) << "\n";
  }
  out.close();

  const auto r = run("fit --data \"" + data.string() + "\" --model sine2");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("model = sine2"), std::string::npos);
  EXPECT_NEAR(value_of(r.out, "amplitude"), 0.1025, 0.1025 * 1e-6);
  EXPECT_NEAR(value_of(r.out, "p_peak_mW"), 300.0, 300.0 * 1e-6);
  EXPECT_LT(value_of(r.out, "rms_residual"), 1e-9);
}

TEST_F(CliRun, FitPolynomialPrintsCoefficientsInWatts) {
  const fs::path data = dir_ / "line.csv";
  std::ofstream out(data);
  out << "power_mW,value\n100,5.2\n200,5.4\n300,5.6\n";
  out.close();
  const auto r = run("fit --data \"" + data.string() + "\" --model poly:1");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out, "c0"), 5.0, 1e-9);
  EXPECT_NEAR(value_of(r.out, "c1"), 2.0, 1e-9);  // per W
}

TEST_F(CliRun, FitWithTooFewSamplesIsNumericFailure) {
  const fs::path data = dir_ / "short.csv";
  std::ofstream out(data);
  out << "power_mW,efficiency\n100,0.05\n200,0.09\n";
  out.close();
  const auto r = run("fit --data \"" + data.string() + "\" --model sine2");
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.err.find("error: numeric:"), std::string::npos) << r.err;
}

TEST_F(CliRun, UnknownModelIsValidationFailure) {
  const fs::path data = dir_ / "any.csv";
  std::ofstream out(data);
  out << "100,0.05\n200,0.09\n300,0.1\n";
  out.close();
  const auto r = run("fit --data \"" + data.string() + "\" --model poly:9");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("error: validation:"), std::string::npos) << r.err;
}

TEST_F(CliRun, MissingSubcommandIsUsageFailure) {
  const auto r = run("");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("error: usage:"), std::string::npos) << r.err;
}

TEST_F(CliRun, BadConfigKeyNamesTheKey) {
  const fs::path bad = dir_ / "bad.ini";
  std::ofstream out(bad);
  out << "[grating]\nlenght_mm = 52\n";
  out.close();
  const auto r = run("budget --config \"" + bad.string() + "\"");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("lenght_mm"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("bad.ini:2"), std::string::npos) << r.err;
}

}  // namespace
