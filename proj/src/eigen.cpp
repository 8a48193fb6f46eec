#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "meralab/errors.hpp"
#include "meralab/linalg.hpp"

namespace meralab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-14;
constexpr double kHermitianTolerance = 1e-10;

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

// Cyclic Jacobi on a dense Hermitian matrix stored row-major in `a`.
// On return the diagonal of `a` holds eigenvalues and the rows of `vt`
// the matching eigenvectors (conjugated, i.e. V^dagger). T is double for
// real symmetric input. Rows p and q are updated contiguously and then
// mirrored into the columns, which keeps the inner loops cache-friendly.
template <typename T, bool kVectors>
void jacobi(std::vector<T>& a, std::vector<T>& vt, std::size_t n, double scale) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  const double threshold = kOffDiagonalThreshold * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    off = std::sqrt(2.0 * off);
    if (off <= threshold) return;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = real_of(at(p, p));
        const double aqq = real_of(at(q, q));
        // Negligible relative to both diagonal entries: drop it outright.
        const double g = 100.0 * mag;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          at(p, q) = T{};
          at(q, p) = T{};
          continue;
        }
        // d rotates a_pq onto the positive real axis.
        const T d = conj_of(apq) / mag;
        const T dc = conj_of(d);
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        T* rp = &a[p * n];
        T* rq = &a[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = rp[k];
          const T aqk = dc * rq[k];
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          at(k, p) = conj_of(rp[k]);
          at(k, q) = conj_of(rq[k]);
        }
        rp[p] = app - t * mag;
        rq[q] = aqq + t * mag;
        rp[q] = T{};
        rq[p] = T{};

        if constexpr (!kVectors) continue;
        T* vp = &vt[p * n];
        T* vq = &vt[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const T vpk = vp[k];
          const T vqk = dc * vq[k];
          vp[k] = c * vpk - s * vqk;
          vq[k] = s * vpk + c * vqk;
        }
      }
    }
  }
  throw NumericError("eigh: Jacobi did not converge within 100 sweeps");
}

template <typename T, bool kVectors>
EigenSystem run_jacobi(const ComplexMatrix& h, double scale) {
  const std::size_t n = h.rows();
  std::vector<T> a(n * n);
  std::vector<T> v(kVectors ? n * n : 0, T{});
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (kVectors) v[i * n + i] = T{1.0};
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize to wash out sub-tolerance asymmetry.
      const Complex sym = 0.5 * (h(i, j) + std::conj(h(j, i)));
      if constexpr (std::is_same_v<T, double>)
        a[i * n + j] = sym.real();
      else
        a[i * n + j] = (i == j) ? Complex(sym.real(), 0.0) : sym;
    }
  }
  jacobi<T, kVectors>(a, v, n, scale);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return real_of(a[x * n + x]) < real_of(a[y * n + y]);
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(kVectors ? n : 1, kVectors ? n : 1)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = real_of(a[src * n + src]);
    if constexpr (kVectors)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = conj_of(v[src * n + i]);
  }
  return out;
}

ComplexVector column(const ComplexMatrix& m, std::size_t j) {
  ComplexVector c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

// Orthogonalize `w` against the first `count` columns of `basis` (two passes).
void project_out(ComplexVector& w, const ComplexMatrix& basis, std::size_t count) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < count; ++j) {
      Complex overlap{};
      for (std::size_t i = 0; i < w.dim(); ++i) overlap += std::conj(basis(i, j)) * w[i];
      for (std::size_t i = 0; i < w.dim(); ++i) w[i] -= overlap * basis(i, j);
    }
}

double check_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw ShapeError("eigh: matrix not square");
  const std::size_t n = h.rows();
  const double scale = frobenius_norm(h);
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) asym = std::max(asym, std::abs(h(i, j) - std::conj(h(j, i))));
  if (asym > kHermitianTolerance * std::max(1.0, scale))
    throw ContractError("eigh: input is not Hermitian (max |h - h^dagger| = " + std::to_string(asym) + ")");
  return scale;
}

}  // namespace

EigenSystem eigh(const ComplexMatrix& h) {
  const double scale = check_hermitian(h);
  if (h.is_real()) return run_jacobi<double, true>(h, scale);
  return run_jacobi<Complex, true>(h, scale);
}

std::vector<double> eigvalsh(const ComplexMatrix& h) {
  const double scale = check_hermitian(h);
  if (h.is_real()) return run_jacobi<double, false>(h, scale).values;
  return run_jacobi<Complex, false>(h, scale).values;
}

SvdResult svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    SvdResult t = svd(adjoint(m));
    return {std::move(t.v), std::move(t.singular), std::move(t.u)};
  }
  const std::size_t rows = m.rows();
  const std::size_t k = m.cols();
  const EigenSystem gram = eigh(matmul(adjoint(m), m));

  // Singular values straight from |m v|; more accurate than sqrt(eigenvalue)
  // for the small end of the spectrum.
  struct Candidate {
    double sigma;
    ComplexVector v;
    ComplexVector w;
  };
  std::vector<Candidate> cands;
  cands.reserve(k);
  for (std::size_t j = k; j-- > 0;) {
    ComplexVector vj = column(gram.vectors, j);
    ComplexVector wj = apply(m, vj);
    cands.push_back({norm(wj), std::move(vj), std::move(wj)});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& x, const Candidate& y) { return x.sigma > y.sigma; });

  const double null_cut = 1e-13 * std::max(cands.front().sigma, 1e-300);
  SvdResult out{ComplexMatrix(rows, k), std::vector<double>(k), ComplexMatrix(k, k)};
  for (std::size_t j = 0; j < k; ++j) {
    out.singular[j] = cands[j].sigma;
    for (std::size_t i = 0; i < k; ++i) out.v(i, j) = cands[j].v[i];

    ComplexVector u = cands[j].w;
    bool filled = false;
    if (cands[j].sigma > null_cut) {
      for (auto& z : u.entries()) z /= cands[j].sigma;
      project_out(u, out.u, j);
      const double nu = norm(u);
      if (nu > 0.5) {
        for (auto& z : u.entries()) z /= nu;
        filled = true;
      }
    }
    if (!filled) {
      // Null direction: complete the basis with the best remaining unit vector.
      double best = -1.0;
      for (std::size_t e = 0; e < rows; ++e) {
        ComplexVector cand = ComplexVector::basis(rows, e);
        project_out(cand, out.u, j);
        const double nc = norm(cand);
        if (nc > best) {
          best = nc;
          u = cand;
        }
      }
      for (auto& z : u.entries()) z /= best;
    }
    for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = u[i];
  }
  return out;
}

ComplexMatrix reconstruct(const SvdResult& s) {
  ComplexMatrix scaled = s.u;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= s.singular[j];
  return matmul(scaled, adjoint(s.v));
}

}  // namespace meralab
