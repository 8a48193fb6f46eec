#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "meralab/linalg.hpp"

namespace meralab::heisenberg {

enum class Boundary { Open, Periodic };

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 12;

/// 1-based nearest-neighbour bonds; Periodic adds (n, 1).
std::vector<std::pair<int, int>> bonds(int n, Boundary bc);

/// H = sum over bonds of S_i . S_j with J = 1 and no constant shift.
/// Dense 2^n x 2^n, real symmetric. ResourceError outside 2..12 sites.
ComplexMatrix hamiltonian(int n, Boundary bc);

/// Basis states with a fixed number of down spins (1-bits), ascending.
struct SectorBasis {
  int n = 0;
  int n_down = 0;
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
};

SectorBasis sector_basis(int n, int n_down);

/// h restricted to rows/cols in `basis`.
ComplexMatrix project_sector(const ComplexMatrix& h, const SectorBasis& basis);

/// Same matrix as project_sector(hamiltonian(n, bc), sector_basis(n, n_down))
/// assembled without the full space.
ComplexMatrix sector_hamiltonian(int n, Boundary bc, int n_down);

struct GroundState {
  double energy = 0.0;
  ComplexVector state{1};  // full 2^n space, normalized, phase fixed
  int n_down = 0;          // sector the state was taken from
};

/// Lowest eigenpair over all magnetization sectors. Among degenerate sectors
/// the one with fewest down spins wins.
GroundState ground_state(int n, Boundary bc);

struct SectorSpectrum {
  int n_down = 0;
  std::vector<double> eigenvalues;  // ascending
};

std::vector<SectorSpectrum> sector_spectra(int n, Boundary bc);

/// <psi|H|psi>/<psi|psi>. DomainError for the zero vector.
double energy_expectation(const ComplexMatrix& h, const ComplexVector& psi);

/// Global phase convention: the largest-magnitude amplitude becomes real
/// positive; near-ties (relative 1e-10) go to the lowest index.
ComplexVector fix_phase(const ComplexVector& v);

/// Bitwise complement of every site (global spin flip).
inline std::size_t complement(std::size_t index, int n) { return index ^ ((std::size_t{1} << n) - 1); }

namespace serial {

ComplexMatrix hamiltonian(int n, Boundary bc);

}  // namespace serial

}  // namespace meralab::heisenberg
