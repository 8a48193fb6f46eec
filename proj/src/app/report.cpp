#include "meralab/app/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "meralab/errors.hpp"

namespace meralab::app {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json{{"im", z.imag()}, {"re", z.real()}}; }
Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

template <std::size_t N>
json complex_array(const std::array<Complex, N>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(complex_json(z));
  return out;
}

template <std::size_t N>
std::array<Complex, N> complex_array_from(const json& j) {
  std::array<Complex, N> out{};
  if (j.size() != N) throw ContractError("report: wrong array length");
  for (std::size_t k = 0; k < N; ++k) out[k] = complex_from(j[k]);
  return out;
}

json angle_json(const wavelet::AngleReport& a) {
  return json{{"arg_b_minus_half_pi", a.arg_b_minus_half_pi},
              {"arg_b_literal", a.arg_b_literal},
              {"bethe_angle", a.bethe_angle},
              {"d4_lattice_angle", a.d4_lattice_angle},
              {"minus_pi_12", a.minus_pi_12},
              {"phi_minus_two_abs_theta", a.phi_minus_two_abs_theta},
              {"theta_star", a.theta_star},
              {"theta_star_minus_pi_12", a.theta_star_minus_pi_12},
              {"two_theta", a.two_theta}};
}

wavelet::AngleReport angle_from(const json& j) {
  wavelet::AngleReport a;
  a.arg_b_minus_half_pi = j.at("arg_b_minus_half_pi").get<double>();
  a.arg_b_literal = j.at("arg_b_literal").get<double>();
  a.bethe_angle = j.at("bethe_angle").get<double>();
  a.d4_lattice_angle = j.at("d4_lattice_angle").get<double>();
  a.minus_pi_12 = j.at("minus_pi_12").get<double>();
  a.phi_minus_two_abs_theta = j.at("phi_minus_two_abs_theta").get<double>();
  a.theta_star = j.at("theta_star").get<double>();
  a.theta_star_minus_pi_12 = j.at("theta_star_minus_pi_12").get<double>();
  a.two_theta = j.at("two_theta").get<double>();
  return a;
}

void write(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner_pad(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner_pad << json(it.key()).dump() << ": ";
        write(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ",\n";
        os << inner_pad;
        write(os, j[k], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) throw NumericError("report contains a non-finite number");
      std::string s = format_double(x);
      // Keep floats recognizable as floats when they happen to be integral.
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      os << s;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.check_results)
    checks.push_back(json{{"asserted", c.asserted},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"tolerance", c.tolerance},
                          {"value", c.value}});
  json roots = json::array();
  for (const auto& z : r.bethe_roots) roots.push_back(complex_json(z));

  json j;
  j["schema_version"] = r.schema_version;
  j["entangler"] = r.entangler;
  j["sites"] = r.sites;
  j["boundary"] = r.boundary;
  j["theta_star"] = r.theta_star;
  j["theta_star_over_pi"] = r.theta_star_over_pi;
  j["theta_numeric"] = r.theta_numeric;
  j["r"] = r.r;
  j["ground_energy_ed"] = r.ground_energy_ed;
  j["ground_energy_mera"] = r.ground_energy_mera;
  j["fidelity"] = r.fidelity;
  j["literal_circuit_fidelity"] = r.literal_circuit_fidelity;
  j["ed_coefficients"] = r.ed_coefficients;
  j["entropy_cut2"] = r.entropy_cut2;
  j["bethe_roots"] = roots;
  j["bethe_energy"] = r.bethe_energy;
  j["bethe_residual"] = r.bethe_residual;
  j["nu_roots_derived"] = complex_array(r.nu_roots_derived);
  j["nu_roots_residual"] = r.nu_roots_residual;
  j["nu_paper_values"] = complex_array(r.nu_paper_values);
  j["nu_paper_residual"] = r.nu_paper_residual;
  j["b_at_nu_paper"] = complex_json(r.b_at_nu_paper);
  j["d4_taps"] = r.d4_taps;
  j["angle_table"] = angle_json(r.angle_table);
  j["check_results"] = checks;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != "1") throw ContractError("unsupported report schema " + r.schema_version);
  r.entangler = j.at("entangler").get<std::string>();
  r.sites = j.at("sites").get<int>();
  r.boundary = j.at("boundary").get<std::string>();
  r.theta_star = j.at("theta_star").get<double>();
  r.theta_star_over_pi = j.at("theta_star_over_pi").get<double>();
  r.theta_numeric = j.at("theta_numeric").get<double>();
  r.r = j.at("r").get<double>();
  r.ground_energy_ed = j.at("ground_energy_ed").get<double>();
  r.ground_energy_mera = j.at("ground_energy_mera").get<double>();
  r.fidelity = j.at("fidelity").get<double>();
  r.literal_circuit_fidelity = j.at("literal_circuit_fidelity").get<double>();
  r.ed_coefficients = j.at("ed_coefficients").get<std::array<double, 6>>();
  r.entropy_cut2 = j.at("entropy_cut2").get<double>();
  for (const auto& z : j.at("bethe_roots")) r.bethe_roots.push_back(complex_from(z));
  r.bethe_energy = j.at("bethe_energy").get<double>();
  r.bethe_residual = j.at("bethe_residual").get<double>();
  r.nu_roots_derived = complex_array_from<2>(j.at("nu_roots_derived"));
  r.nu_roots_residual = j.at("nu_roots_residual").get<std::array<double, 2>>();
  r.nu_paper_values = complex_array_from<2>(j.at("nu_paper_values"));
  r.nu_paper_residual = j.at("nu_paper_residual").get<double>();
  r.b_at_nu_paper = complex_from(j.at("b_at_nu_paper"));
  r.d4_taps = j.at("d4_taps").get<std::array<double, 4>>();
  r.angle_table = angle_from(j.at("angle_table"));
  for (const auto& c : j.at("check_results"))
    r.check_results.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                               c.at("value").get<double>(), c.at("tolerance").get<double>(),
                               c.at("asserted").get<bool>()});
  return r;
}

std::string serialize(const nlohmann::json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace meralab::app
