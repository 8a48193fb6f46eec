#pragma once

#include <array>
#include <vector>

#include "meralab/gates.hpp"
#include "meralab/heisenberg.hpp"
#include "meralab/linalg.hpp"

namespace meralab::mera {

using gates::EntanglerSpec;
using heisenberg::Boundary;

inline constexpr int kSites = 4;
inline constexpr std::size_t kDim = 16;

/// Amplitudes of the two isometries; the IR state is left (x) right.
/// Component order is (00, 01, 10, 11).
struct IsometryParams {
  std::array<double, 4> left{};
  std::array<double, 4> right{};

  /// ContractError unless both 4-vectors have unit norm within tol.
  void validate(double tol = 1e-12) const;

  /// L00 = R00 = R11 = 0 with left = (0,1,0,0) and R01/R10 = -r.
  static IsometryParams trivial(double r);

  /// r = -R01/R10.
  double ratio() const { return -right[1] / right[2]; }
};

/// |Omega> = L (x) R, 16 components.
ComplexVector ir_state(const IsometryParams& iso);

/// The circuit layers in application order. Periodic: inner entangler on
/// sites 2-3, swap layer, inner entangler, swap layer. Open: inner entangler only.
std::vector<ComplexMatrix> circuit_layers(const EntanglerSpec& spec, Boundary bc = Boundary::Periodic);

/// Layers applied literally to ir_state(iso). Unitary for Rotation.
ComplexVector circuit_state(const EntanglerSpec& spec, const IsometryParams& iso, Boundary bc = Boundary::Periodic);

/// Keeps the s1 = 0 half and overwrites the s1 = 1 half with its spin-flip
/// image: out[complement(s)] = in[s] for s1 = 0.
ComplexVector mirror_upper_half(const ComplexVector& v);

/// First eight amplitudes (s1 = 0).
std::array<Complex, 8> upper_half(const ComplexVector& v);

struct TrialState {
  EntanglerSpec spec;
  IsometryParams iso;
  ComplexVector state;  // normalized
  double raw_norm;      // norm before normalization; state * raw_norm is the raw circuit output
};

/// Variational state for the 4-site ring. The s1 = 1 half of |Omega> is
/// replaced by the spin-flip image of the s1 = 0 half, the circuit is applied,
/// and the s1 = 1 half of the result is again completed by spin flip. The
/// result is spin-flip symmetric for every entangler.
TrialState trial_state(const EntanglerSpec& spec, const IsometryParams& iso, Boundary bc = Boundary::Periodic);

struct ThetaSolution {
  double theta = 0.0;
  double r = 0.0;  // -R01/R10
  double sin_m2theta = 0.0;
  double cos_m2theta = 0.0;
};

/// Target amplitudes on 0011, 0101, 0110.
struct AmplitudeTarget {
  double a = 1.0;
  double b = -2.0;
  double c = 1.0;
};

/// Closed-form match A = r sin(-2theta), B = -r cos(-2theta), C = 1.
ThetaSolution solve_theta_analytic(AmplitudeTarget target = {});

/// Energy of the best trial state at fixed theta (r optimized in closed form).
struct ThetaPoint {
  double theta = 0.0;
  double r = 0.0;
  double energy = 0.0;
  double gradient = 0.0;  // dE/dtheta with r held at its optimum
  ComplexVector state{1};
};

ThetaPoint optimize_ratio(double theta, const ComplexMatrix& h);

struct NumericOptimum {
  ThetaSolution solution;
  double energy = 0.0;
  double fidelity = 0.0;
  int evaluations = 0;
};

/// Coarse scan, golden-section refinement, then bisection on dE/dtheta.
/// Only the 4-site periodic ring is supported.
NumericOptimum solve_theta_numeric(int n = kSites, Boundary bc = Boundary::Periodic);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const ComplexVector& a, const ComplexVector& b);

/// Von Neumann entropy (nats) of the leftmost `cut` sites.
double entanglement_entropy(const ComplexVector& psi, int cut);

/// Reduced-density spectrum behind entanglement_entropy, descending.
std::vector<double> schmidt_spectrum(const ComplexVector& psi, int cut);

/// Roots of the R-matrix ratio condition 2bc : (b^2+c^2) = 1 : -2.
struct NuFit {
  std::array<Complex, 2> roots;           // solutions of nu^2 + 8i nu - 4 = 0
  std::array<double, 2> root_residuals;   // |b^2 + c^2 + 4bc| at each root
  std::array<Complex, 2> literal_values;    // -4i +- 2 sqrt(3)
  std::array<double, 2> literal_residuals;  // same residual at those values
  std::array<Complex, 2> b_at_literal;
};

double nu_fit_residual(Complex nu);
NuFit solve_nu_fit();

struct SweepRow {
  double theta = 0.0;
  double optimal_r = 0.0;
  double energy = 0.0;
  double fidelity = 0.0;
  double entropy = 0.0;
};

/// Evenly spaced theta grid (steps >= 1, theta_min <= theta_max), rows in
/// theta order. Grid points are evaluated in parallel.
std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps);

namespace serial {

std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps);

}  // namespace serial

}  // namespace meralab::mera
