#pragma once

#include <vector>

#include "meralab/linalg.hpp"

// Coordinate conventions: e^{ip} = (lambda + i)/(lambda - i), magnon scattering
// poles at lambda_j - lambda_k = +-2i.
namespace meralab::bethe {

struct BetheRoots {
  int length = 0;               // chain length L
  std::vector<Complex> roots;   // rapidities
  double residual_norm = 0.0;   // max_j |LHS_j - RHS_j|
};

/// ((l_j+i)/(l_j-i))^L - prod_{k!=j} (l_j-l_k+2i)/(l_j-l_k-2i), one entry per root.
/// DomainError if a root sits within 1e-10 of +-i or a pair within 1e-10 of +-2i.
std::vector<Complex> bethe_residual(const std::vector<Complex>& roots, int length);

double max_residual(const std::vector<Complex>& roots, int length);

/// Symmetric pair lambda_1 = -lambda_2 = lambda by Newton on the log form,
/// starting from `initial`. NumericError after 100 iterations.
BetheRoots solve_two_magnon(int length = 4, double initial = 0.5);

/// Momenta in (-pi, pi]. DomainError for non-real roots.
std::vector<double> momenta_from_roots(const std::vector<Complex>& roots);

/// E = L/4 - sum_j 2/(lambda_j^2 + 1) in the J = 1 convention of the
/// Heisenberg module. DomainError for non-real roots.
double energy_from_roots(const std::vector<Complex>& roots, int length);

struct MagnonState {
  double momentum = 0.0;
  double rapidity = 0.0;  // +inf for p = 0
  double energy = 0.0;
};

/// The L one-magnon states p = 2 pi k / L.
std::vector<MagnonState> one_magnon_states(int length);

}  // namespace meralab::bethe
