#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace meralab {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

/// Dense complex matrix, row-major. Always at least 1x1.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  /// Elementwise |a_ij - b_ij| <= tol. Shape mismatch compares false.
  bool approx_equal(const ComplexMatrix& other, double tol = kDefaultTolerance) const;

  /// True when every entry has exactly zero imaginary part.
  bool is_real() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// Complex amplitude vector; dim >= 1.
class ComplexVector {
 public:
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  bool approx_equal(const ComplexVector& other, double tol = kDefaultTolerance) const;

 private:
  std::vector<Complex> data_;
};

// Products. These are the OpenMP kernels; `serial::` holds the reference
// versions with identical per-entry summation order.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v);

ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
/// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

Complex inner(const ComplexVector& a, const ComplexVector& b);  // <a|b>
double norm(const ComplexVector& v);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex s, const ComplexVector& v);
ComplexVector normalized(const ComplexVector& v);

/// ‖a·a† − I‖_F; zero for unitary a.
double unitarity_defect(const ComplexMatrix& a);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws ContractError for non-Hermitian input (tolerance 1e-10 relative to ‖h‖),
/// NumericError if 100 sweeps do not reach the 1e-14·‖h‖ off-diagonal threshold.
EigenSystem eigh(const ComplexMatrix& h);

/// Eigenvalues only (ascending); same algorithm without accumulating vectors.
std::vector<double> eigvalsh(const ComplexMatrix& h);

struct SvdResult {
  ComplexMatrix u;               // rows x k, orthonormal columns
  std::vector<double> singular;  // nonincreasing, k = min(rows, cols)
  ComplexMatrix v;               // cols x k, orthonormal columns
};

/// Thin SVD: m = u · diag(singular) · v†.
SvdResult svd(const ComplexMatrix& m);

/// Reassembles u · diag(s) · v†.
ComplexMatrix reconstruct(const SvdResult& s);

namespace serial {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v);

}  // namespace serial

}  // namespace meralab
