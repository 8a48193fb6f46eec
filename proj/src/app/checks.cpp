#include "meralab/app/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "meralab/bethe.hpp"
#include "meralab/gates.hpp"
#include "meralab/heisenberg.hpp"
#include "meralab/mera.hpp"
#include "meralab/wavelet.hpp"

namespace meralab::app {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRandomSamples = 100;
constexpr std::uint64_t kSeed = 20161015;

class Suite {
 public:
  explicit Suite(std::optional<double> override_tol) : override_(override_tol) {}

  void expect(std::string name, double measured, double tolerance) {
    const double tol = override_.value_or(tolerance);
    results_.push_back({std::move(name), measured <= tol, measured, tol, true});
  }

  void report(std::string name, double value) { results_.push_back({std::move(name), true, value, 0.0, false}); }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::optional<double> override_;
  std::vector<CheckResult> results_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

}  // namespace

ComplexMatrix reference_sector_block() {
  const double h = 0.5;
  return {{0, h, 0, 0, h, 0}, {h, -1, h, h, 0, h}, {0, h, 0, 0, h, 0},
          {0, h, 0, 0, h, 0}, {h, 0, h, h, -1, h}, {0, h, 0, 0, h, 0}};
}

std::vector<CheckResult> run_checks(std::optional<double> tolerance_override) {
  using heisenberg::Boundary;
  Suite s(tolerance_override);
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);

  // Circuit algebra.
  const ComplexMatrix id4 = ComplexMatrix::identity(4);
  s.expect("swap_involution", frobenius_norm(matmul(gates::swap(), gates::swap()) - id4), 0.0);
  double rot_unitarity = 0.0;
  double eq13 = 0.0;
  const ComplexMatrix ss = gates::swap_layer(4);
  for (int k = 0; k < kRandomSamples; ++k) {
    const double theta = angle(rng);
    const ComplexMatrix u = gates::entangler_rotation(theta);
    rot_unitarity = std::max(rot_unitarity, unitarity_defect(u));
    const ComplexMatrix a = gates::embed(u, 2, 4);
    eq13 = std::max(eq13, frobenius_norm(commutator(a, matmul(ss, matmul(a, ss)))));
  }
  s.expect("rotation_unitarity_max", rot_unitarity, 1e-14);
  s.expect("layer_exchange_commutator_max", eq13, 1e-13);

  double disjoint = 0.0;
  for (int n = 4; n <= 8; ++n) {
    const double theta = angle(rng);
    const ComplexMatrix u = gates::entangler_rotation(theta);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        disjoint = std::max(disjoint, frobenius_norm(commutator(gates::embed(u, i, n), gates::embed(u, j, n))));
  }
  s.expect("disjoint_entangler_commutator_max", disjoint, 1e-13);
  {
    const auto spec = gates::EntanglerSpec::rotation(0.4);
    const ComplexMatrix u = gates::entangler(spec);
    s.report("overlapping_entangler_commutator", frobenius_norm(commutator(gates::embed(u, 1, 4), gates::embed(u, 2, 4))));
    s.report("monodromy_order_dependence",
             frobenius_norm(gates::monodromy(spec, 2) - gates::monodromy_reversed(spec, 2)));
  }

  // R-matrix identities.
  double bc_sum = 0.0;
  double r_unitarity = 0.0;
  double bc_modulus_real = 0.0;
  for (int k = 0; k < kRandomSamples; ++k) {
    const Complex nu(coord(rng), coord(rng));
    const auto [b, c] = gates::bc(nu);
    bc_sum = std::max(bc_sum, std::abs(b + c - 1.0));
    const double lambda = coord(rng);
    r_unitarity = std::max(r_unitarity, unitarity_defect(gates::rmatrix(lambda)));
    const auto real_bc = gates::bc(lambda);
    bc_modulus_real = std::max(bc_modulus_real, std::abs(std::norm(real_bc.b) + std::norm(real_bc.c) - 1.0));
  }
  s.expect("bc_sum_max", bc_sum, 1e-14);
  s.expect("bc_modulus_real_max", bc_modulus_real, 1e-14);
  s.expect("rmatrix_unitarity_real_max", r_unitarity, 1e-13);

  const mera::NuFit fit = mera::solve_nu_fit();
  s.expect("nu_fit_root_residual_max", std::max(fit.root_residuals[0], fit.root_residuals[1]), 1e-12);
  {
    const auto [b, c] = gates::bc(fit.roots[0]);
    s.report("bc_modulus_at_derived_root", std::norm(b) + std::norm(c));
    s.report("rmatrix_unitarity_defect_at_derived_root", unitarity_defect(gates::rmatrix(fit.roots[0])));
  }
  s.report("nu_paper_residual", fit.literal_residuals[0]);

  // Exact diagonalization.
  const ComplexMatrix h = heisenberg::hamiltonian(4, Boundary::Periodic);
  const ComplexMatrix block = heisenberg::project_sector(h, heisenberg::sector_basis(4, 2));
  s.expect("sector_block_matches_reference", max_abs_diff(block, reference_sector_block()), 0.0);
  {
    const ComplexVector v{1, -2, 1, 1, -2, 1};
    const ComplexVector hv = apply(reference_sector_block(), v);
    s.expect("reference_block_eigen_residual", norm(hv + Complex(2.0) * v), 0.0);
  }
  const auto ground = heisenberg::ground_state(4, Boundary::Periodic);
  s.expect("ed_energy_error", std::abs(ground.energy + 2.0), 1e-10);
  {
    const auto basis = heisenberg::sector_basis(4, 2);
    const std::array<double, 6> expected{1, -2, 1, 1, -2, 1};
    const Complex a0 = ground.state[basis.indices[0]];
    double worst = 0.0;
    for (std::size_t k = 0; k < 6; ++k)
      worst = std::max(worst, std::abs(ground.state[basis.indices[k]] / a0 - expected[k]));
    s.expect("ed_coefficient_ratio_error", worst, 1e-10);
  }

  // MERA optimum.
  const mera::ThetaSolution analytic = mera::solve_theta_analytic();
  s.expect("theta_sin_error", std::abs(analytic.sin_m2theta - 1.0 / std::sqrt(5.0)), 1e-14);
  s.expect("theta_cos_error", std::abs(analytic.cos_m2theta - 2.0 / std::sqrt(5.0)), 1e-14);
  s.expect("theta_over_pi_error", std::abs(analytic.theta / kPi + 0.0738), 5e-4);
  const auto iso = mera::IsometryParams::trivial(analytic.r);
  {
    double l = 0.0;
    double r = 0.0;
    for (int k = 0; k < 4; ++k) {
      l += iso.left[k] * iso.left[k];
      r += iso.right[k] * iso.right[k];
    }
    s.expect("isometry_left_normalization", std::abs(l - 1.0), 1e-12);
    s.expect("isometry_right_normalization", std::abs(r - 1.0), 1e-12);
  }
  const auto trial = mera::trial_state(gates::EntanglerSpec::rotation(analytic.theta), iso);
  s.expect("mera_fidelity_defect", 1.0 - mera::fidelity(trial.state, ground.state), 1e-10);
  s.expect("mera_energy_error", std::abs(heisenberg::energy_expectation(h, trial.state) - ground.energy), 1e-10);
  const mera::NumericOptimum numeric = mera::solve_theta_numeric();
  s.expect("theta_numeric_agreement", std::abs(numeric.solution.theta - analytic.theta), 1e-8);
  s.report("literal_circuit_fidelity",
           mera::fidelity(mera::circuit_state(gates::EntanglerSpec::rotation(analytic.theta), iso), ground.state));
  {
    const auto rspec = gates::EntanglerSpec::rmatrix(fit.roots[0]);
    const auto rtrial = mera::trial_state(rspec, mera::IsometryParams::trivial(1.0));
    s.report("rmatrix_trial_fidelity", mera::fidelity(rtrial.state, ground.state));
  }

  // Entanglement.
  const double s_exact = 0.75 * std::log(4.0 / 3.0) + 0.25 * std::log(12.0);
  s.expect("entropy_ground_state_error", std::abs(mera::entanglement_entropy(ground.state, 2) - s_exact), 1e-12);
  s.expect("entropy_trivial_state",
           mera::entanglement_entropy(mera::circuit_state(gates::EntanglerSpec::rotation(0.0), iso), 2), 0.0);

  // Bethe anchor.
  const auto roots = bethe::solve_two_magnon(4);
  s.expect("bethe_root_error", std::abs(roots.roots[0].real() - 1.0 / std::sqrt(3.0)), 1e-12);
  s.expect("bethe_residual", roots.residual_norm, 1e-12);
  s.expect("bethe_energy_error", std::abs(bethe::energy_from_roots(roots.roots, 4) - ground.energy), 1e-10);

  // Wavelet.
  const auto d4 = wavelet::d4_coefficients();
  s.expect("d4_sum_error", std::abs(d4.sum() - std::sqrt(2.0)), 1e-12);
  s.expect("d4_energy_error", std::abs(d4.energy() - 1.0), 1e-12);
  s.expect("d4_shift2_overlap", std::abs(d4.shift2_overlap()), 1e-12);
  s.expect("d4_alternating_sum", std::abs(d4.alternating_sum()), 1e-12);
  s.expect("d4_first_moment", std::abs(d4.first_moment()), 1e-12);
  {
    const auto lat = wavelet::lattice_filter(wavelet::d4_lattice_angle());
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(lat.taps[k] - d4.taps[k]));
    s.expect("lattice_d4_match", worst, 1e-12);
  }
  const auto angles = wavelet::angle_report(analytic.theta, roots.roots[0].real());
  s.report("theta_star_minus_pi_12_over_pi", angles.theta_star_minus_pi_12 / kPi);
  s.report("phi_minus_two_abs_theta_over_pi", angles.phi_minus_two_abs_theta / kPi);

  return s.take();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace meralab::app
