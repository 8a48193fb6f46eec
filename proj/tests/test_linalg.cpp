#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <omp.h>

#include "meralab/errors.hpp"
#include "meralab/gates.hpp"
#include "meralab/linalg.hpp"
#include "support.hpp"

using namespace meralab;
using testing::Gen;
using testing::max_abs_diff;

TEST_CASE("kron examples") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)).approx_equal(ComplexMatrix::identity(4), 0.0));

  const double th = 0.37;
  const auto r8 = kron(gates::entangler_rotation(th), ComplexMatrix::identity(2));
  REQUIRE(r8.rows() == 8);
  // 1-based (3,3) and (3,5)
  CHECK(r8(2, 2) == Complex(std::cos(th)));
  CHECK(r8(2, 4) == Complex(std::sin(th)));
  CHECK(r8(4, 2) == Complex(-std::sin(th)));

  const auto big = kron(ComplexMatrix::identity(2), r8);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const bool same_block = (i < 8) == (j < 8);
      const Complex expect = same_block ? r8(i % 8, j % 8) : Complex{};
      REQUIRE(big(i, j) == expect);
    }
}

TEST_CASE("kron layout and shape") {
  const ComplexMatrix a{{1, 2, 3}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  const auto k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 6);
  CHECK(k(0, 3) == Complex(2.0));
  CHECK(k(1, 4) == Complex(3.0));
  CHECK(k(0, 4) == Complex(0.0));

  const ComplexVector up{1, 0};
  const ComplexVector down{0, 1};
  CHECK(kron(up, down).approx_equal(ComplexVector::basis(4, 1), 0.0));
}

TEST_CASE("matmul examples") {
  const auto s = gates::swap();
  CHECK(matmul(ComplexMatrix::identity(4), s).approx_equal(s, 0.0));
  CHECK(matmul(s, s).approx_equal(ComplexMatrix::identity(4), 0.0));
  const auto u = gates::entangler_rotation(0.3);
  CHECK(matmul(u, adjoint(u)).approx_equal(ComplexMatrix::identity(4), 1e-15));
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(apply(ComplexMatrix(2, 3), ComplexVector(2)), ShapeError);
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(ComplexMatrix::identity(4)).approx_equal(ComplexMatrix::identity(4), 0.0));
  CHECK(adjoint(gates::swap()).approx_equal(gates::swap(), 0.0));
  CHECK(adjoint(gates::entangler_rotation(0.8)).approx_equal(gates::entangler_rotation(-0.8), 0.0));
  const ComplexMatrix m{{Complex(1, 2), Complex(3, -1)}};
  const auto a = adjoint(m);
  CHECK(a.rows() == 2);
  CHECK(a(1, 0) == Complex(3, 1));
}

TEST_CASE("frobenius norm examples") {
  CHECK(frobenius_norm(ComplexMatrix::zeros(4, 4)) == 0.0);
  CHECK(frobenius_norm(ComplexMatrix::identity(4)) == 2.0);
  const auto a = gates::embed(gates::entangler_rotation(0.4), 2, 4);
  const auto ss = gates::swap_layer(4);
  CHECK(frobenius_norm(commutator(a, matmul(ss, matmul(a, ss)))) < 1e-13);
}

TEST_CASE("eigh examples") {
  const std::vector<double> d{2.0, 1.0};
  const auto es = eigh(ComplexMatrix::diagonal(d));
  CHECK(es.values == std::vector<double>{1.0, 2.0});

  const auto flip = eigh(ComplexMatrix{{0, 1}, {1, 0}});
  CHECK(flip.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(flip.values[1] == doctest::Approx(1.0).epsilon(1e-15));

  // Sz = 0 block of the 4-site ring; (1,-2,1,1,-2,1) is an eigenvector with -2.
  const ComplexMatrix h{{0, 0.5, 0, 0, 0.5, 0},    {0.5, -1, 0.5, 0.5, 0, 0.5}, {0, 0.5, 0, 0, 0.5, 0},
                        {0, 0.5, 0, 0, 0.5, 0},    {0.5, 0, 0.5, 0.5, -1, 0.5}, {0, 0.5, 0, 0, 0.5, 0}};
  const ComplexVector v{1, -2, 1, 1, -2, 1};
  CHECK(apply(h, v).approx_equal(Complex(-2.0) * v, 0.0));
  const auto hs = eigh(h);
  CHECK(hs.values[0] == doctest::Approx(-2.0).epsilon(1e-14));
  ComplexVector v0(6);
  for (std::size_t i = 0; i < 6; ++i) v0[i] = hs.vectors(i, 0);
  CHECK(std::abs(std::abs(inner(v0, v)) - norm(v)) < 1e-12);
}

TEST_CASE("eigh errors") {
  CHECK_THROWS_AS(eigh(ComplexMatrix{{0, 1}, {0, 0}}), ContractError);
  CHECK_THROWS_AS(eigh(ComplexMatrix(2, 3)), ShapeError);
  // Asymmetry below the Hermitian tolerance is accepted.
  CHECK_NOTHROW(eigh(ComplexMatrix{{0, 1}, {1 + 1e-12, 0}}));
}

TEST_CASE("property: eigh reconstructs random Hermitian matrices") {
  Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 64));
    const auto h = g.hermitian(n);
    const auto es = eigh(h);
    const double scale = frobenius_norm(h);
    for (std::size_t k = 1; k < n; ++k) REQUIRE(es.values[k - 1] <= es.values[k]);

    ComplexMatrix rebuilt = ComplexMatrix::zeros(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          rebuilt(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
    REQUIRE(max_abs_diff(rebuilt, h) <= 1e-9 * scale);

    const auto gram = matmul(adjoint(es.vectors), es.vectors);
    REQUIRE(max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-10);
    const auto residual = matmul(h, es.vectors);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE(std::abs(residual(i, k) - es.values[k] * es.vectors(i, k)) <= 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("property: real symmetric input takes the real path with the same contract") {
  Gen g(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 40));
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) h(i, j) = h(j, i) = g.uniform(-1, 1);
    const auto es = eigh(h);
    const auto residual = matmul(h, es.vectors);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        REQUIRE(std::abs(residual(i, k) - es.values[k] * es.vectors(i, k)) <= 1e-10 * frobenius_norm(h));
  }
}

TEST_CASE("svd examples") {
  const auto id = svd(ComplexMatrix::identity(4));
  CHECK(id.singular == std::vector<double>{1, 1, 1, 1});

  // Operator-Schmidt form of U(pi/6).
  const auto m = gates::operator_schmidt_matrix(gates::entangler_rotation(testing::kPi / 6));
  const auto s = svd(m);
  CHECK(max_abs_diff(reconstruct(s), m) < 1e-13);
  double total = 0.0;
  for (double x : s.singular) total += x * x;
  CHECK(total == doctest::Approx(4.0).epsilon(1e-13));
  MESSAGE("operator-Schmidt coefficients of U(pi/6): " << s.singular[0] << " " << s.singular[1] << " "
                                                       << s.singular[2] << " " << s.singular[3]);

  // Rank one.
  const ComplexVector a = normalized(ComplexVector{1, Complex(0, 2), -1});
  const ComplexVector b = normalized(ComplexVector{3, 1});
  ComplexMatrix outer(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) outer(i, j) = a[i] * std::conj(b[j]);
  const auto r1 = svd(outer);
  CHECK(r1.singular[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r1.singular[1] < 1e-14);
  CHECK(max_abs_diff(matmul(adjoint(r1.u), r1.u), ComplexMatrix::identity(2)) < 1e-13);
}

TEST_CASE("property: svd reconstruction on random matrices") {
  Gen g(13);
  for (std::size_t n : {4u, 8u})
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = g.matrix(n, n);
      const auto s = svd(m);
      REQUIRE(max_abs_diff(reconstruct(s), m) < 1e-11);
      for (std::size_t k = 1; k < n; ++k) REQUIRE(s.singular[k - 1] >= s.singular[k]);
      REQUIRE(max_abs_diff(matmul(adjoint(s.u), s.u), ComplexMatrix::identity(n)) < 1e-11);
      REQUIRE(max_abs_diff(matmul(adjoint(s.v), s.v), ComplexMatrix::identity(n)) < 1e-11);
    }
  for (int trial = 0; trial < 20; ++trial) {
    const auto wide = g.matrix(3, 7);
    REQUIRE(max_abs_diff(reconstruct(svd(wide)), wide) < 1e-11);
    const auto tall = g.matrix(9, 2);
    REQUIRE(max_abs_diff(reconstruct(svd(tall)), tall) < 1e-11);
  }
}

TEST_CASE("property: kron associativity and mixed product") {
  Gen g(14);
  // Gaussian-integer entries keep every product exact, so equality is exact.
  auto integral = [&](std::size_t r, std::size_t c) {
    ComplexMatrix m(r, c);
    for (auto& z : m.entries()) z = Complex(g.integer(-9, 9), g.integer(-9, 9));
    return m;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = integral(g.integer(1, 3), g.integer(1, 3));
    const auto b = integral(g.integer(1, 3), g.integer(1, 3));
    const auto c = integral(g.integer(1, 3), g.integer(1, 3));
    REQUIRE(testing::bitwise_equal(kron(kron(a, b), c), kron(a, kron(b, c))));

    const auto p = g.matrix(2, 3);
    const auto q = g.matrix(3, 2);
    const auto r = g.matrix(2, 2);
    const auto s = g.matrix(2, 4);
    REQUIRE(max_abs_diff(matmul(kron(p, r), kron(q, s)), kron(matmul(p, q), matmul(r, s))) < 1e-13);
  }
}

TEST_CASE("vector helpers") {
  CHECK_THROWS_AS(normalized(ComplexVector(3)), DegenerateInputError);
  const ComplexVector v{3, Complex(0, 4)};
  CHECK(norm(v) == 5.0);
  CHECK(inner(ComplexVector{Complex(0, 1)}, ComplexVector{1}) == Complex(0, -1));
  CHECK(unitarity_defect(gates::swap()) == 0.0);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  Gen g(15);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto a = g.matrix(96, 80);
  const auto b = g.matrix(80, 72);
  const auto x = g.vector(80);
  CHECK(testing::bitwise_equal(matmul(a, b), serial::matmul(a, b)));
  CHECK(apply(a, x).approx_equal(serial::apply(a, x), 0.0));
  const auto c = g.matrix(16, 12);
  const auto d = g.matrix(9, 11);
  CHECK(testing::bitwise_equal(kron(c, d), serial::kron(c, d)));
  // Below the threshold the same code path runs single-threaded.
  const auto e = g.matrix(3, 3);
  CHECK(testing::bitwise_equal(matmul(e, e), serial::matmul(e, e)));
  omp_set_num_threads(saved);
}

TEST_CASE("eigvalsh agrees with eigh") {
  Gen g(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = g.hermitian(static_cast<std::size_t>(g.integer(1, 30)));
    const auto full = eigh(h).values;
    const auto only = eigvalsh(h);
    REQUIRE(full.size() == only.size());
    for (std::size_t k = 0; k < full.size(); ++k) REQUIRE(std::abs(full[k] - only[k]) < 1e-12);
  }
  CHECK_THROWS_AS(eigvalsh(ComplexMatrix{{0, 1}, {0, 0}}), ContractError);
}
