#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <omp.h>

#include <bit>

#include "meralab/errors.hpp"
#include "meralab/heisenberg.hpp"
#include "support.hpp"

using namespace meralab;
using namespace meralab::heisenberg;

namespace {

const std::vector<std::size_t> kSz0{3, 5, 6, 9, 10, 12};

ComplexMatrix eq30_block() {
  return ComplexMatrix{{0, 0.5, 0, 0, 0.5, 0},    {0.5, -1, 0.5, 0.5, 0, 0.5}, {0, 0.5, 0, 0, 0.5, 0},
                       {0, 0.5, 0, 0, 0.5, 0},    {0.5, 0, 0.5, 0.5, -1, 0.5}, {0, 0.5, 0, 0, 0.5, 0}};
}

int bit(std::size_t s, int site, int n) { return static_cast<int>((s >> (n - site)) & 1U); }

// Product of singlets (|up_i down_j> - |down_i up_j>) over the given pairs,
// built amplitude by amplitude from the definition.
ComplexVector singlet_covering(const std::vector<std::pair<int, int>>& pairs, int n) {
  ComplexVector v(std::size_t{1} << n);
  for (std::size_t s = 0; s < v.dim(); ++s) {
    double amp = 1.0;
    for (auto [i, j] : pairs) {
      const int si = bit(s, i, n), sj = bit(s, j, n);
      if (si == sj) {
        amp = 0.0;
        break;
      }
      amp *= (si == 0) ? 1.0 : -1.0;
    }
    v[s] = amp;
  }
  return v;
}

}  // namespace

TEST_CASE("bonds") {
  CHECK(bonds(4, Boundary::Open) == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(bonds(4, Boundary::Periodic).back() == std::pair<int, int>{4, 1});
}

TEST_CASE("hamiltonian examples") {
  const auto es = eigh(hamiltonian(2, Boundary::Open));
  CHECK(es.values[0] == doctest::Approx(-0.75).epsilon(1e-14));
  for (int k = 1; k < 4; ++k) CHECK(es.values[k] == doctest::Approx(0.25).epsilon(1e-14));

  CHECK(project_sector(hamiltonian(4, Boundary::Periodic), sector_basis(4, 2)).approx_equal(eq30_block(), 0.0));
  CHECK(ground_state(4, Boundary::Periodic).energy == doctest::Approx(-2.0).epsilon(1e-13));

  CHECK_THROWS_AS(hamiltonian(1, Boundary::Open), ResourceError);
  CHECK_THROWS_AS(hamiltonian(13, Boundary::Periodic), ResourceError);
  CHECK_THROWS_AS(ground_state(13, Boundary::Periodic), ResourceError);
}

TEST_CASE("hamiltonian entries are single-bond multiples of one half or one quarter") {
  const auto h = hamiltonian(3, Boundary::Open);
  CHECK(h(0, 0) == Complex(0.5));           // 000: both bonds aligned
  CHECK(h(2, 2) == Complex(-0.5));          // 010: both anti-aligned
  CHECK(h(2, 4) == Complex(0.5));           // 010 <-> 100 exchange on bond (1,2)
  CHECK(h(1, 4) == Complex(0.0));           // 001 <-> 100 not adjacent
  CHECK(h(1, 2) == Complex(0.5));
}

TEST_CASE("sector basis examples") {
  CHECK(sector_basis(4, 2).indices == kSz0);
  CHECK(sector_basis(2, 0).indices == std::vector<std::size_t>{0});
  CHECK(sector_basis(3, 1).indices == std::vector<std::size_t>{1, 2, 4});
  const auto b = sector_basis(10, 4);
  CHECK(b.size() == 210);
  for (std::size_t k = 0; k < b.size(); ++k) {
    REQUIRE(std::popcount(b.indices[k]) == 4);
    if (k > 0) REQUIRE(b.indices[k - 1] < b.indices[k]);
  }
}

TEST_CASE("project sector examples") {
  const auto basis = sector_basis(4, 2);
  CHECK(project_sector(ComplexMatrix::identity(16), basis).approx_equal(ComplexMatrix::identity(6), 0.0));
  const auto up = project_sector(hamiltonian(4, Boundary::Periodic), sector_basis(4, 0));
  CHECK(up.rows() == 1);
  CHECK(up(0, 0) == Complex(1.0));
  CHECK_THROWS_AS(project_sector(ComplexMatrix::identity(8), basis), ShapeError);
}

TEST_CASE("sector_hamiltonian equals projecting the full matrix") {
  for (int n = 2; n <= 7; ++n)
    for (auto bc : {Boundary::Open, Boundary::Periodic})
      for (int d = 0; d <= n; ++d)
        REQUIRE(sector_hamiltonian(n, bc, d).approx_equal(project_sector(hamiltonian(n, bc), sector_basis(n, d)), 0.0));
}

TEST_CASE("ground state examples") {
  const auto g4 = ground_state(4, Boundary::Periodic);
  CHECK(g4.n_down == 2);
  CHECK(norm(g4.state) == doctest::Approx(1.0).epsilon(1e-14));
  const std::array<double, 6> pattern{1, -2, 1, 1, -2, 1};
  const Complex a = g4.state[3];
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(std::abs(g4.state[kSz0[k]] / a - pattern[k]) < 1e-10);
  CHECK(std::abs(std::abs(a) - 1 / std::sqrt(12.0)) < 1e-12);
  // Phase convention: the largest amplitude (first at 0101) is real positive.
  CHECK(g4.state[5].real() > 0);
  CHECK(g4.state[5].imag() == 0.0);
  for (std::size_t s = 0; s < 16; ++s)
    if (std::find(kSz0.begin(), kSz0.end(), s) == kSz0.end()) REQUIRE(g4.state[s] == Complex(0.0));

  const auto g2 = ground_state(2, Boundary::Open);
  CHECK(g2.energy == doctest::Approx(-0.75).epsilon(1e-14));
  const ComplexVector singlet{0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  CHECK(g2.state.approx_equal(singlet, 1e-14));

  const double open4 = ground_state(4, Boundary::Open).energy;
  MESSAGE("E0(4, open) = " << open4);
  CHECK(open4 == doctest::Approx(-(3 + 2 * std::sqrt(3.0)) / 4).epsilon(1e-12));
}

TEST_CASE("energy expectation examples") {
  const ComplexMatrix d{{0, 0}, {0, 1}};
  CHECK(energy_expectation(d, ComplexVector{1, 0}) == 0.0);

  const auto h = hamiltonian(4, Boundary::Periodic);
  CHECK(energy_expectation(h, ground_state(4, Boundary::Periodic).state) == doctest::Approx(-2.0).epsilon(1e-12));

  // Row sums of the Sz = 0 block are all 1, so the uniform vector is an eigenvector with 1.
  ComplexVector uniform(16);
  for (auto s : kSz0) uniform[s] = 1.0;
  CHECK(energy_expectation(h, uniform) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(energy_expectation(h, ComplexVector(16)), DomainError);
  CHECK_THROWS_AS(energy_expectation(h, ComplexVector(8)), ShapeError);
}

TEST_CASE("property: H is real symmetric") {
  for (int n = 2; n <= 8; ++n) {
    const auto h = hamiltonian(n, Boundary::Periodic);
    CHECK(h.is_real());
    REQUIRE(frobenius_norm(h - transpose(h)) == 0.0);
  }
}

TEST_CASE("property: sector spectra equal the full spectrum") {
  for (int n = 2; n <= 6; ++n)
    for (auto bc : {Boundary::Open, Boundary::Periodic}) {
      const auto full = eigh(hamiltonian(n, bc)).values;
      std::vector<double> merged;
      for (const auto& s : sector_spectra(n, bc)) merged.insert(merged.end(), s.eigenvalues.begin(), s.eigenvalues.end());
      std::sort(merged.begin(), merged.end());
      REQUIRE(merged.size() == full.size());
      for (std::size_t k = 0; k < full.size(); ++k) REQUIRE(merged[k] == doctest::Approx(full[k]).epsilon(1e-11));
    }
}

TEST_CASE("property: H commutes with total Sz") {
  for (int n = 2; n <= 6; ++n) {
    const auto h = hamiltonian(n, Boundary::Periodic);
    ComplexMatrix sz(h.rows(), h.cols());
    for (std::size_t s = 0; s < h.rows(); ++s) sz(s, s) = 0.5 * n - std::popcount(s);
    REQUIRE(frobenius_norm(commutator(h, sz)) == 0.0);
  }
}

TEST_CASE("spin-flip symmetry of the 4-site ground state") {
  const auto g = ground_state(4, Boundary::Periodic);
  for (std::size_t s = 0; s < 16; ++s) REQUIRE(std::abs(g.state[complement(s, 4)] - g.state[s]) < 1e-12);
}

TEST_CASE("ground state is the sum of the two singlet coverings") {
  const auto a = singlet_covering({{1, 2}, {3, 4}}, 4);
  const auto b = singlet_covering({{2, 3}, {4, 1}}, 4);
  const auto rvb = a + b;
  const auto g = ground_state(4, Boundary::Periodic);
  const double overlap = std::norm(inner(rvb, g.state)) / std::norm(norm(rvb));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-13));
  // Each covering alone is not an eigenstate.
  const auto h = hamiltonian(4, Boundary::Periodic);
  CHECK(energy_expectation(h, a) > -2.0 + 0.1);
}

TEST_CASE("fix_phase") {
  const ComplexVector v{Complex(0, 1), Complex(0, -1), 0.5};
  const auto f = fix_phase(v);
  CHECK(f[0] == Complex(1.0));
  CHECK(f[1] == Complex(-1.0));
  CHECK(std::abs(f[2] - Complex(0, -0.5)) < 1e-16);
}

TEST_CASE("10-site ring reference energy") {
  const auto g = ground_state(10, Boundary::Periodic);
  CHECK(g.energy == doctest::Approx(-4.515446354492).epsilon(1e-11));
  CHECK(energy_expectation(hamiltonian(10, Boundary::Periodic), g.state) == doctest::Approx(g.energy).epsilon(1e-12));
}

TEST_CASE("parallel assembly matches the serial reference bit for bit") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (int n : {3, 8, 10})
    for (auto bc : {Boundary::Open, Boundary::Periodic})
      REQUIRE(testing::bitwise_equal(hamiltonian(n, bc), heisenberg::serial::hamiltonian(n, bc)));
  omp_set_num_threads(saved);
}
