#pragma once

#include <array>
#include <string>
#include <vector>

#include "meralab/linalg.hpp"
#include "meralab/wavelet.hpp"

#include <json.hpp>

namespace meralab::app {

struct CheckResult {
  std::string name;
  bool passed = true;
  double value = 0.0;      // measured error or reported quantity
  double tolerance = 0.0;  // meaningless when !asserted
  bool asserted = true;    // false: reported only, never fails
};

/// Everything `optimize` reproduces, serialized as schema "1".
struct Report {
  std::string schema_version = "1";
  std::string entangler = "rotation";
  int sites = 4;
  std::string boundary = "periodic";

  double theta_star = 0.0;
  double theta_star_over_pi = 0.0;
  double theta_numeric = 0.0;
  double r = 0.0;
  double ground_energy_ed = 0.0;
  double ground_energy_mera = 0.0;
  double fidelity = 0.0;
  double literal_circuit_fidelity = 0.0;
  std::array<double, 6> ed_coefficients{};
  double entropy_cut2 = 0.0;

  std::vector<Complex> bethe_roots;
  double bethe_energy = 0.0;
  double bethe_residual = 0.0;

  std::array<Complex, 2> nu_roots_derived{};
  std::array<double, 2> nu_roots_residual{};
  std::array<Complex, 2> nu_paper_values{};
  double nu_paper_residual = 0.0;
  Complex b_at_nu_paper{};

  std::array<double, 4> d4_taps{};
  wavelet::AngleReport angle_table;
  std::vector<CheckResult> check_results;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Deterministic text: sorted keys, two-space indent, every floating-point
/// value printed with 17 significant digits, trailing newline.
std::string serialize(const nlohmann::json& j);

/// "%.17g"
std::string format_double(double x);

}  // namespace meralab::app
