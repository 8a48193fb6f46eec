#include "meralab/app/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "meralab/app/checks.hpp"
#include "meralab/bethe.hpp"
#include "meralab/errors.hpp"
#include "meralab/gates.hpp"
#include "meralab/mera.hpp"
#include "meralab/wavelet.hpp"

namespace meralab::app {

namespace {

constexpr double kPi = std::numbers::pi;
using heisenberg::Boundary;

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << content;
  f.close();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

const char* boundary_name(Boundary bc) { return bc == Boundary::Open ? "open" : "periodic"; }

}  // namespace

std::optional<double> resolve_tolerance(std::optional<double> flag) {
  if (flag) return flag;
  const char* env = std::getenv("MERA_LAB_TOLERANCE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 0.0)) throw std::invalid_argument("MERA_LAB_TOLERANCE is not a valid tolerance");
  return v;
}

Report build_report(const OptimizeOptions& opts) {
  if (opts.sites != mera::kSites || opts.bc != Boundary::Periodic)
    throw DomainError("optimize supports only --sites 4 --bc periodic");
  if (opts.entangler != "rotation" && opts.entangler != "rmatrix")
    throw DomainError("unknown entangler '" + opts.entangler + "'");

  Report r;
  r.entangler = opts.entangler;
  r.sites = opts.sites;
  r.boundary = boundary_name(opts.bc);

  const ComplexMatrix h = heisenberg::hamiltonian(mera::kSites, Boundary::Periodic);
  const auto ground = heisenberg::ground_state(mera::kSites, Boundary::Periodic);
  r.ground_energy_ed = ground.energy;
  {
    const auto basis = heisenberg::sector_basis(4, 2);
    const Complex a0 = ground.state[basis.indices[0]];
    for (std::size_t k = 0; k < 6; ++k) r.ed_coefficients[k] = (ground.state[basis.indices[k]] / a0).real();
  }
  r.entropy_cut2 = mera::entanglement_entropy(ground.state, 2);

  const auto analytic = mera::solve_theta_analytic();
  const auto numeric = mera::solve_theta_numeric();
  r.theta_star = analytic.theta;
  r.theta_star_over_pi = analytic.theta / kPi;
  r.theta_numeric = numeric.solution.theta;
  const auto iso = mera::IsometryParams::trivial(analytic.r);
  const auto rotation = gates::EntanglerSpec::rotation(analytic.theta);
  r.literal_circuit_fidelity = mera::fidelity(mera::circuit_state(rotation, iso), ground.state);

  const mera::NuFit fit = mera::solve_nu_fit();
  r.nu_roots_derived = fit.roots;
  r.nu_roots_residual = fit.root_residuals;
  r.nu_paper_values = fit.literal_values;
  r.nu_paper_residual = fit.literal_residuals[0];
  r.b_at_nu_paper = fit.b_at_literal[0];

  if (opts.entangler == "rotation") {
    r.r = analytic.r;
    const auto trial = mera::trial_state(rotation, iso);
    r.ground_energy_mera = heisenberg::energy_expectation(h, trial.state);
    r.fidelity = mera::fidelity(trial.state, ground.state);
  } else {
    // With 2bc = -1 and b^2+c^2 = 2 the match needs R01 = -R10.
    const auto riso = mera::IsometryParams::trivial(1.0);
    r.r = riso.ratio();
    const auto trial = mera::trial_state(gates::EntanglerSpec::rmatrix(fit.roots[0]), riso);
    r.ground_energy_mera = heisenberg::energy_expectation(h, trial.state);
    r.fidelity = mera::fidelity(trial.state, ground.state);
  }

  const auto roots = bethe::solve_two_magnon(4);
  r.bethe_roots = roots.roots;
  r.bethe_energy = bethe::energy_from_roots(roots.roots, 4);
  r.bethe_residual = roots.residual_norm;

  r.d4_taps = wavelet::d4_coefficients().taps;
  r.angle_table = wavelet::angle_report(analytic.theta, roots.roots[0].real());
  r.check_results = run_checks(opts.tolerance);
  return r;
}

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.sites != mera::kSites || opts.bc != Boundary::Periodic) {
    err << "usage error: optimize supports only --sites 4 --bc periodic\n";
    return kExitUsage;
  }
  Report report;
  try {
    report = build_report(opts);
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  const std::string text = serialize(to_json(report));
  if (opts.out.empty()) {
    out << text;
  } else {
    if (!write_file(opts.out, text, err)) return kExitFailure;
    const std::string meta = serialize(nlohmann::json{{"generated_at", utc_timestamp()}});
    if (!write_file(opts.out + ".meta.json", meta, err)) return kExitFailure;
    out << "theta* = " << format_double(report.theta_star) << " (" << format_double(report.theta_star_over_pi)
        << " pi), fidelity = " << format_double(report.fidelity) << "\nwrote " << opts.out << "\n";
  }
  return all_passed(report.check_results) ? kExitOk : kExitFailure;
}

int cmd_ed(const EdOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.sites < heisenberg::kMinSites || opts.sites > heisenberg::kMaxSites) {
    err << "usage error: --sites must lie in 2..12\n";
    return kExitUsage;
  }
  try {
    const auto spectra = heisenberg::sector_spectra(opts.sites, opts.bc);
    double e0 = spectra.front().eigenvalues.front();
    for (const auto& s : spectra) e0 = std::min(e0, s.eigenvalues.front());
    out << "sites " << opts.sites << ", " << boundary_name(opts.bc) << " boundary\n";
    out << "E0 = " << format_double(e0) << "\n\n";
    out << "n_down  2Sz  dim   E_min                   E_max\n";
    for (const auto& s : spectra) {
      out << std::setw(6) << s.n_down << std::setw(5) << (opts.sites - 2 * s.n_down) << std::setw(5)
          << s.eigenvalues.size() << "   " << std::left << std::setw(24) << format_double(s.eigenvalues.front())
          << format_double(s.eigenvalues.back()) << std::right << "\n";
    }
    if (opts.sites % 2 == 0) {
      const auto basis = heisenberg::sector_basis(opts.sites, opts.sites / 2);
      if (basis.size() <= 20) {
        const ComplexMatrix block = heisenberg::sector_hamiltonian(opts.sites, opts.bc, opts.sites / 2);
        out << "\nSz = 0 block:\n";
        for (std::size_t a = 0; a < basis.size(); ++a) {
          for (int bit = opts.sites - 1; bit >= 0; --bit) out << ((basis.indices[a] >> bit) & 1U);
          out << " ";
          for (std::size_t b = 0; b < basis.size(); ++b) out << std::setw(6) << block(a, b).real();
          out << "\n";
        }
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_bethe(const BetheOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.magnons != 1 && opts.magnons != 2) {
    err << "usage error: --magnons must be 1 or 2\n";
    return kExitUsage;
  }
  if (opts.sites < 3 || opts.sites > heisenberg::kMaxSites) {
    err << "usage error: --sites must lie in 3..12\n";
    return kExitUsage;
  }
  try {
    if (opts.magnons == 1) {
      out << "one-magnon states, L = " << opts.sites << "\n";
      out << "momentum                 rapidity                 energy\n";
      for (const auto& m : bethe::one_magnon_states(opts.sites))
        out << std::left << std::setw(25) << format_double(m.momentum) << std::setw(25)
            << (std::isinf(m.rapidity) ? std::string("inf") : format_double(m.rapidity)) << format_double(m.energy)
            << std::right << "\n";
      const auto block = heisenberg::sector_hamiltonian(opts.sites, heisenberg::Boundary::Periodic, 1);
      out << "ED (n_down = 1):";
      for (double e : eigvalsh(block)) out << " " << format_double(e);
      out << "\n";
      return kExitOk;
    }
    const auto roots = bethe::solve_two_magnon(opts.sites);
    const auto momenta = bethe::momenta_from_roots(roots.roots);
    out << "two-magnon symmetric roots, L = " << opts.sites << "\n";
    for (std::size_t j = 0; j < roots.roots.size(); ++j)
      out << "lambda_" << j + 1 << " = " << format_double(roots.roots[j].real()) << "   p = " << format_double(momenta[j])
          << "\n";
    out << "residual = " << format_double(roots.residual_norm) << "\n";
    out << "E = " << format_double(bethe::energy_from_roots(roots.roots, opts.sites)) << "\n";
    out << "E_ED(n_down = 2) = "
        << format_double(eigvalsh(heisenberg::sector_hamiltonian(opts.sites, heisenberg::Boundary::Periodic, 2)).front())
        << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  if (!(opts.theta_min <= opts.theta_max) || opts.steps < 1) {
    err << "usage error: need --theta-min <= --theta-max and --steps >= 1\n";
    return kExitUsage;
  }
  std::vector<mera::SweepRow> rows;
  try {
    rows = mera::sweep(opts.theta_min, opts.theta_max, opts.steps);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  std::ostringstream csv;
  csv << "theta,optimal_r,energy,fidelity,entropy\n";
  for (const auto& row : rows)
    csv << format_double(row.theta) << "," << format_double(row.optimal_r) << "," << format_double(row.energy) << ","
        << format_double(row.fidelity) << "," << format_double(row.entropy) << "\n";
  if (opts.out.empty()) {
    out << csv.str();
    return kExitOk;
  }
  if (!write_file(opts.out, csv.str(), err)) return kExitFailure;
  out << "wrote " << rows.size() << " rows to " << opts.out << "\n";
  return kExitOk;
}

int cmd_wavelet(std::ostream& out, std::ostream& err) {
  try {
    const auto d4 = wavelet::d4_coefficients();
    out << "D4 taps (lowpass analysis, leftmost first):\n";
    for (double t : d4.taps) out << "  " << format_double(t) << "\n";
    out << "sum           = " << format_double(d4.sum()) << "\n";
    out << "sum of squares= " << format_double(d4.energy()) << "\n";
    out << "first moment  = " << format_double(d4.first_moment()) << "\n";
    out << "lattice angle = " << format_double(wavelet::d4_lattice_angle()) << " ("
        << format_double(wavelet::d4_lattice_angle() / kPi) << " pi)\n\n";

    const auto theta = mera::solve_theta_analytic().theta;
    const auto root = bethe::solve_two_magnon(4).roots[0].real();
    const auto a = wavelet::angle_report(theta, root);
    auto line = [&](const char* name, double v) {
      out << std::left << std::setw(26) << name << std::setw(25) << format_double(v) << format_double(v / kPi)
          << " pi" << std::right << "\n";
    };
    out << "angle                     radians                  /pi\n";
    line("theta*", a.theta_star);
    line("-pi/12", a.minus_pi_12);
    line("theta* - (-pi/12)", a.theta_star_minus_pi_12);
    line("2 theta*", a.two_theta);
    line("phi (tan phi = lambda)", a.bethe_angle);
    line("phi - 2|theta*|", a.phi_minus_two_abs_theta);
    line("arg b(nu_literal)", a.arg_b_literal);
    line("arg b - pi/2", a.arg_b_minus_half_pi);
    line("D4 lattice angle", a.d4_lattice_angle);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_check(std::optional<double> tolerance, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_checks(tolerance);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  int failed = 0;
  for (const auto& c : results) {
    if (!c.asserted) {
      out << "INFO  " << std::left << std::setw(44) << c.name << format_double(c.value)
          << "  (reported, not asserted)" << std::right << "\n";
      continue;
    }
    if (!c.passed) ++failed;
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << c.name << std::setw(26)
        << format_double(c.value) << "tol " << format_double(c.tolerance) << std::right << "\n";
  }
  out << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n");
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace meralab::app
