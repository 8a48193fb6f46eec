#include "meralab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meralab/errors.hpp"

namespace meralab {

namespace {

// Below this many output entries the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 4096;

void require_nonempty(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be >= 1");
}

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("shape mismatch: " + shape(a) + " vs " + shape(b));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  require_nonempty(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_nonempty(rows, cols);
  if (data_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_nonempty(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (std::abs(data_[k] - other.data_[k]) > tol) return false;
  return true;
}

bool ComplexMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

ComplexVector::ComplexVector(std::size_t dim) : data_(dim) {
  if (dim == 0) throw ShapeError("vector dimension must be >= 1");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
  if (data_.empty()) throw ShapeError("vector dimension must be >= 1");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {
  if (data_.empty()) throw ShapeError("vector dimension must be >= 1");
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ShapeError("basis index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

bool ComplexVector::approx_equal(const ComplexVector& other, double tol) const {
  if (dim() != other.dim()) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (std::abs(data_[k] - other.data_[k]) > tol) return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  ComplexMatrix out(rows, cols);
  const auto ar = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for if (rows * cols >= kParallelThreshold) schedule(static)
  for (std::ptrdiff_t i = 0; i < ar; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(ui, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(ui * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: " + shape(a) + " times " + shape(b));
  ComplexMatrix out(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for if (a.rows() * b.cols() * a.cols() >= kParallelThreshold) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(ui, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(ui, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.dim()) throw ShapeError("apply: " + shape(m) + " on dim " + std::to_string(v.dim()));
  ComplexVector out(m.rows());
  const auto n = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for if (m.rows() * m.cols() >= kParallelThreshold) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    Complex acc{};
    for (std::size_t k = 0; k < m.cols(); ++k) acc += m(ui, k) * v[k];
    out[ui] = acc;
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z *= s;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw ShapeError("inner: dimension mismatch");
  Complex acc{};
  for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double norm(const ComplexVector& v) {
  double sum = 0.0;
  for (const auto& z : v.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw ShapeError("vector sum: dimension mismatch");
  ComplexVector out = a;
  for (std::size_t k = 0; k < a.dim(); ++k) out[k] += b[k];
  return out;
}

ComplexVector operator*(Complex s, const ComplexVector& v) {
  ComplexVector out = v;
  for (auto& z : out.entries()) z *= s;
  return out;
}

ComplexVector normalized(const ComplexVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw DegenerateInputError("cannot normalize the zero vector");
  return Complex(1.0 / n) * v;
}

double unitarity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("unitarity_defect: matrix not square");
  return frobenius_norm(matmul(a, adjoint(a)) - ComplexMatrix::identity(a.rows()));
}

}  // namespace meralab
