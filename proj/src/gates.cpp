#include "meralab/gates.hpp"

#include <cmath>
#include <string>

#include "meralab/errors.hpp"

namespace meralab::gates {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPoleDistance = 1e-10;
constexpr int kMaxSites = 12;

void require_off_pole(Complex nu) {
  if (std::abs(nu + 2.0 * kI) < kPoleDistance) throw DomainError("R-matrix pole at nu = -2i");
}

ComplexMatrix embedded_product(const EntanglerSpec& spec, int level, bool reversed) {
  if (level < 1) throw DomainError("monodromy level must be >= 1");
  if (level > 3 || (1 << level) > kMaxSites)
    throw ResourceError("monodromy level " + std::to_string(level) + " exceeds 12 sites");
  const int n = 1 << level;
  const ComplexMatrix gate = entangler(spec);
  ComplexMatrix total = ComplexMatrix::identity(std::size_t{1} << n);
  for (int j = 1; j <= n - 1; ++j) {
    const ComplexMatrix g = embed(gate, j, n);
    total = reversed ? matmul(total, g) : matmul(g, total);
  }
  return total;
}

}  // namespace

EntanglerSpec EntanglerSpec::rotation(double theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
  return {EntanglerFamily::Rotation, Complex(theta, 0.0)};
}

EntanglerSpec EntanglerSpec::rmatrix(Complex nu) {
  require_off_pole(nu);
  return {EntanglerFamily::RMatrix, nu};
}

ComplexMatrix entangler_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{1, 0, 0, 0}, {0, c, s, 0}, {0, -s, c, 0}, {0, 0, 0, 1}};
}

ComplexMatrix entangler_rotation_derivative(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{0, 0, 0, 0}, {0, -s, c, 0}, {0, -c, -s, 0}, {0, 0, 0, 0}};
}

ComplexMatrix swap() { return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

BCFunctions bc(Complex nu) {
  require_off_pole(nu);
  const Complex denom = nu + 2.0 * kI;
  return {2.0 * kI / denom, nu / denom};
}

ComplexMatrix rmatrix(Complex nu) {
  const auto [b, c] = bc(nu);
  return {{1, 0, 0, 0}, {0, b, c, 0}, {0, c, b, 0}, {0, 0, 0, 1}};
}

ComplexMatrix entangler(const EntanglerSpec& spec) {
  switch (spec.family()) {
    case EntanglerFamily::Rotation:
      return entangler_rotation(spec.theta());
    case EntanglerFamily::RMatrix:
      return rmatrix(spec.parameter());
  }
  throw DomainError("unknown entangler family");
}

ComplexMatrix embed(const ComplexMatrix& gate, int site, int n) {
  if (gate.rows() != 4 || gate.cols() != 4) throw ShapeError("embed: gate must be 4x4");
  if (n < 2 || site < 1 || site > n - 1)
    throw ShapeError("embed: site " + std::to_string(site) + " invalid for " + std::to_string(n) + " sites");
  const ComplexMatrix left = ComplexMatrix::identity(std::size_t{1} << (site - 1));
  const ComplexMatrix right = ComplexMatrix::identity(std::size_t{1} << (n - site - 1));
  return kron(left, kron(gate, right));
}

ComplexMatrix swap_layer(int n) {
  if (n < 2 || n % 2 != 0) throw ShapeError("swap_layer needs an even site count >= 2");
  ComplexMatrix layer = swap();
  for (int k = 1; k < n / 2; ++k) layer = kron(layer, swap());
  return layer;
}

ComplexMatrix monodromy(const EntanglerSpec& spec, int level) { return embedded_product(spec, level, false); }

ComplexMatrix monodromy_reversed(const EntanglerSpec& spec, int level) {
  return embedded_product(spec, level, true);
}

ComplexMatrix operator_schmidt_matrix(const ComplexMatrix& gate) {
  if (gate.rows() != 4 || gate.cols() != 4) throw ShapeError("operator_schmidt_matrix: gate must be 4x4");
  ComplexMatrix m(4, 4);
  for (int s2 = 0; s2 < 2; ++s2)
    for (int s3 = 0; s3 < 2; ++s3)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m(2 * s2 + a, 2 * s3 + b) = gate(2 * s2 + s3, 2 * a + b);
  return m;
}

}  // namespace meralab::gates
