#include "meralab/heisenberg.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "meralab/errors.hpp"

namespace meralab::heisenberg {

namespace {

void require_sites(int n) {
  if (n < kMinSites || n > kMaxSites)
    throw ResourceError("site count " + std::to_string(n) + " outside supported range 2..12");
}

// Bit position of 1-based site i in an n-site index (site 1 = MSB).
inline int bit_of(int site, int n) { return n - site; }

// Accumulates column `state` of the Hamiltonian: diagonal into `diag`,
// off-diagonal targets into `emit(target, value)`.
template <typename Emit>
void column_terms(std::size_t state, int n, const std::vector<std::pair<int, int>>& bond_list, double& diag,
                  Emit&& emit) {
  diag = 0.0;
  for (const auto& [i, j] : bond_list) {
    const int bi = bit_of(i, n);
    const int bj = bit_of(j, n);
    const bool si = (state >> bi) & 1U;
    const bool sj = (state >> bj) & 1U;
    if (si == sj) {
      diag += 0.25;
    } else {
      diag -= 0.25;
      emit(state ^ ((std::size_t{1} << bi) | (std::size_t{1} << bj)), 0.5);
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> bonds(int n, Boundary bc) {
  require_sites(n);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1);
  if (bc == Boundary::Periodic) out.emplace_back(n, 1);
  return out;
}

ComplexMatrix hamiltonian(int n, Boundary bc) {
  const auto bond_list = bonds(n, bc);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix h(dim, dim);
  const auto count = static_cast<std::ptrdiff_t>(dim);
  // Each iteration writes only column `state`, so columns are independent.
#pragma omp parallel for if (dim >= 256) schedule(static)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    const auto state = static_cast<std::size_t>(s);
    double diag = 0.0;
    column_terms(state, n, bond_list, diag, [&](std::size_t target, double v) { h(target, state) += v; });
    h(state, state) += diag;
  }
  return h;
}

namespace serial {

ComplexMatrix hamiltonian(int n, Boundary bc) {
  const auto bond_list = bonds(n, bc);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix h(dim, dim);
  for (std::size_t state = 0; state < dim; ++state) {
    double diag = 0.0;
    column_terms(state, n, bond_list, diag, [&](std::size_t target, double v) { h(target, state) += v; });
    h(state, state) += diag;
  }
  return h;
}

}  // namespace serial

SectorBasis sector_basis(int n, int n_down) {
  if (n < 1 || n > kMaxSites) throw ResourceError("sector_basis: site count out of range");
  if (n_down < 0 || n_down > n) throw DomainError("sector_basis: n_down must lie in [0, n]");
  SectorBasis basis{n, n_down, {}};
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t s = 0; s < dim; ++s)
    if (std::popcount(s) == n_down) basis.indices.push_back(s);
  return basis;
}

ComplexMatrix project_sector(const ComplexMatrix& h, const SectorBasis& basis) {
  const std::size_t dim = std::size_t{1} << basis.n;
  if (h.rows() != dim || h.cols() != dim)
    throw ShapeError("project_sector: matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
  const std::size_t m = basis.size();
  ComplexMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out(a, b) = h(basis.indices[a], basis.indices[b]);
  return out;
}

ComplexMatrix sector_hamiltonian(int n, Boundary bc, int n_down) {
  const auto bond_list = bonds(n, bc);
  const SectorBasis basis = sector_basis(n, n_down);
  std::vector<std::size_t> position(std::size_t{1} << n, 0);
  for (std::size_t a = 0; a < basis.size(); ++a) position[basis.indices[a]] = a;

  const std::size_t m = basis.size();
  ComplexMatrix h(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    double diag = 0.0;
    column_terms(basis.indices[a], n, bond_list, diag,
                 [&](std::size_t target, double v) { h(position[target], a) += v; });
    h(a, a) += diag;
  }
  return h;
}

GroundState ground_state(int n, Boundary bc) {
  require_sites(n);
  constexpr double kDegeneracy = 1e-10;
  GroundState best;
  bool have = false;
  for (int n_down = 0; n_down <= n; ++n_down) {
    const EigenSystem es = eigh(sector_hamiltonian(n, bc, n_down));
    if (have && es.values.front() >= best.energy - kDegeneracy) continue;
    const SectorBasis basis = sector_basis(n, n_down);
    ComplexVector full(std::size_t{1} << n);
    for (std::size_t a = 0; a < basis.size(); ++a) full[basis.indices[a]] = es.vectors(a, 0);
    best = {es.values.front(), fix_phase(normalized(full)), n_down};
    have = true;
  }
  return best;
}

std::vector<SectorSpectrum> sector_spectra(int n, Boundary bc) {
  require_sites(n);
  std::vector<SectorSpectrum> out;
  for (int n_down = 0; n_down <= n; ++n_down)
    out.push_back({n_down, eigvalsh(sector_hamiltonian(n, bc, n_down))});
  return out;
}

double energy_expectation(const ComplexMatrix& h, const ComplexVector& psi) {
  if (h.rows() != psi.dim() || h.cols() != psi.dim()) throw ShapeError("energy_expectation: dimension mismatch");
  const double nn = norm(psi);
  if (nn == 0.0) throw DomainError("energy_expectation: zero vector");
  const Complex num = inner(psi, apply(h, psi));
  const double e = num.real() / (nn * nn);
  if (std::abs(num.imag()) / (nn * nn) > 1e-12 * std::max(1.0, std::abs(e)))
    throw NumericError("energy_expectation: complex expectation value, operator not Hermitian");
  return e;
}

ComplexVector fix_phase(const ComplexVector& v) {
  double largest = 0.0;
  for (const auto& z : v.entries()) largest = std::max(largest, std::abs(z));
  if (largest == 0.0) return v;
  std::size_t pivot = 0;
  while (std::abs(v[pivot]) < largest * (1.0 - 1e-10)) ++pivot;
  const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
  ComplexVector out = phase * v;
  out[pivot] = std::abs(v[pivot]);
  return out;
}

}  // namespace meralab::heisenberg
