#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "meralab/linalg.hpp"

namespace testing {

inline constexpr double kPi = std::numbers::pi;

// Fixed seeds keep every property run reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double angle() { return uniform(-kPi, kPi); }
  meralab::Complex complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

  meralab::ComplexMatrix matrix(std::size_t rows, std::size_t cols) {
    meralab::ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = complex();
    return m;
  }

  meralab::ComplexMatrix hermitian(std::size_t n) {
    const auto a = matrix(n, n);
    return meralab::Complex(0.5) * (a + meralab::adjoint(a));
  }

  meralab::ComplexVector vector(std::size_t dim) {
    meralab::ComplexVector v(dim);
    for (auto& z : v.entries()) z = complex();
    return v;
  }

  std::array<double, 4> unit4() {
    std::array<double, 4> v{};
    double n = 0.0;
    for (auto& x : v) {
      x = uniform(-1.0, 1.0);
      n += x * x;
    }
    for (auto& x : v) x /= std::sqrt(n);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const meralab::ComplexMatrix& a, const meralab::ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool bitwise_equal(const meralab::ComplexMatrix& a, const meralab::ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (a.entries()[k] != b.entries()[k]) return false;
  return true;
}

}  // namespace testing
