#include "meralab/mera.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include "meralab/errors.hpp"

namespace meralab::mera {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double norm4(const std::array<double, 4>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

ComplexVector raw_ir_state(const std::array<double, 4>& left, const std::array<double, 4>& right) {
  ComplexVector out(kDim);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[4 * i + j] = left[i] * right[j];
  return out;
}

ComplexVector run_layers(const std::vector<ComplexMatrix>& layers, ComplexVector v) {
  for (const auto& layer : layers) v = apply(layer, v);
  return v;
}

// Unnormalized trial state for raw isometry vectors.
ComplexVector raw_trial(const std::vector<ComplexMatrix>& layers, const std::array<double, 4>& left,
                        const std::array<double, 4>& right) {
  return mirror_upper_half(run_layers(layers, mirror_upper_half(raw_ir_state(left, right))));
}

// d/dtheta of raw_trial for the periodic rotation circuit (product rule over
// the two entangler layers).
ComplexVector raw_trial_derivative(double theta, const std::array<double, 4>& left,
                                   const std::array<double, 4>& right) {
  const ComplexMatrix g = gates::embed(gates::entangler_rotation(theta), 2, kSites);
  const ComplexMatrix dg = gates::embed(gates::entangler_rotation_derivative(theta), 2, kSites);
  const ComplexMatrix ss = gates::swap_layer(kSites);
  const ComplexVector omega = mirror_upper_half(raw_ir_state(left, right));
  const ComplexVector first = run_layers({dg, ss, g, ss}, omega);
  const ComplexVector second = run_layers({g, ss, dg, ss}, omega);
  return mirror_upper_half(first + second);
}

const std::array<double, 4> kLeftTrivial{0.0, 1.0, 0.0, 0.0};
const std::array<double, 4> kRightR01{0.0, 1.0, 0.0, 0.0};
const std::array<double, 4> kRightR10{0.0, 0.0, 1.0, 0.0};

}  // namespace

void IsometryParams::validate(double tol) const {
  const double nl = norm4(left);
  const double nr = norm4(right);
  if (std::abs(nl * nl - 1.0) > tol)
    throw ContractError("left isometry not normalized: sum of squares = " + std::to_string(nl * nl));
  if (std::abs(nr * nr - 1.0) > tol)
    throw ContractError("right isometry not normalized: sum of squares = " + std::to_string(nr * nr));
}

IsometryParams IsometryParams::trivial(double r) {
  const double scale = 1.0 / std::sqrt(1.0 + r * r);
  return {{0.0, 1.0, 0.0, 0.0}, {0.0, -r * scale, scale, 0.0}};
}

ComplexVector ir_state(const IsometryParams& iso) {
  iso.validate();
  return raw_ir_state(iso.left, iso.right);
}

std::vector<ComplexMatrix> circuit_layers(const EntanglerSpec& spec, Boundary bc) {
  const ComplexMatrix inner = gates::embed(gates::entangler(spec), 2, kSites);
  if (bc == Boundary::Open) return {inner};
  const ComplexMatrix ss = gates::swap_layer(kSites);
  return {inner, ss, inner, ss};
}

ComplexVector circuit_state(const EntanglerSpec& spec, const IsometryParams& iso, Boundary bc) {
  return run_layers(circuit_layers(spec, bc), ir_state(iso));
}

ComplexVector mirror_upper_half(const ComplexVector& v) {
  if (v.dim() != kDim) throw ShapeError("mirror_upper_half expects a 16-component state");
  ComplexVector out = v;
  for (std::size_t s = 0; s < kDim / 2; ++s) out[heisenberg::complement(s, kSites)] = v[s];
  return out;
}

std::array<Complex, 8> upper_half(const ComplexVector& v) {
  if (v.dim() != kDim) throw ShapeError("upper_half expects a 16-component state");
  std::array<Complex, 8> out{};
  for (std::size_t s = 0; s < 8; ++s) out[s] = v[s];
  return out;
}

TrialState trial_state(const EntanglerSpec& spec, const IsometryParams& iso, Boundary bc) {
  iso.validate();
  const ComplexVector raw = raw_trial(circuit_layers(spec, bc), iso.left, iso.right);
  const double n = norm(raw);
  if (n < 1e-14) throw DegenerateInputError("trial state vanishes for these parameters");
  return {spec, iso, Complex(1.0 / n) * raw, n};
}

ThetaSolution solve_theta_analytic(AmplitudeTarget target) {
  if (target.c == 0.0) throw DomainError("amplitude C must be nonzero");
  const double a = target.a / target.c;
  const double b = target.b / target.c;
  const double r = std::hypot(a, b);
  if (r == 0.0) throw DomainError("amplitudes A and B cannot both vanish");
  const double sin_m2 = a / r;
  const double cos_m2 = -b / r;
  const double theta = -0.5 * std::atan2(sin_m2, cos_m2);
  return {theta, r, sin_m2, cos_m2};
}

ThetaPoint optimize_ratio(double theta, const ComplexMatrix& h) {
  const auto layers = circuit_layers(EntanglerSpec::rotation(theta));
  const ComplexVector phi1 = raw_trial(layers, kLeftTrivial, kRightR01);
  const ComplexVector phi2 = raw_trial(layers, kLeftTrivial, kRightR10);

  // Orthonormalize the two-amplitude family, solve the 2x2 problem.
  const double n1 = norm(phi1);
  if (n1 == 0.0) throw DegenerateInputError("R01 branch of the trial family vanishes");
  const ComplexVector e1 = Complex(1.0 / n1) * phi1;
  const Complex overlap = inner(e1, phi2);
  const ComplexVector perp = phi2 + (-overlap) * e1;
  const double n2 = norm(perp);
  if (n2 == 0.0) throw DegenerateInputError("trial family is one-dimensional");
  const ComplexVector e2 = Complex(1.0 / n2) * perp;

  const ComplexVector he1 = apply(h, e1);
  const ComplexVector he2 = apply(h, e2);
  const ComplexMatrix small{{inner(e1, he1), inner(e1, he2)}, {inner(e2, he1), inner(e2, he2)}};
  const EigenSystem es = eigh(small);
  const Complex y1 = es.vectors(0, 0);
  const Complex y2 = es.vectors(1, 0);

  // Back to coefficients of phi1 (R01) and phi2 (R10).
  const Complex x2 = y2 / n2;
  const Complex x1 = y1 / n1 - x2 * overlap / n1;

  ThetaPoint out;
  out.theta = theta;
  out.r = std::abs(x2) > 0.0 ? (-x1 / x2).real() : std::numeric_limits<double>::infinity();
  out.state = normalized(x1 * phi1 + x2 * phi2);
  out.energy = heisenberg::energy_expectation(h, out.state);

  const ComplexVector psi = x1 * phi1 + x2 * phi2;
  const ComplexVector dpsi = x1 * raw_trial_derivative(theta, kLeftTrivial, kRightR01) +
                             x2 * raw_trial_derivative(theta, kLeftTrivial, kRightR10);
  const double nn = norm(psi);
  const ComplexVector residual = apply(h, psi) + Complex(-out.energy) * psi;
  out.gradient = 2.0 * inner(residual, dpsi).real() / (nn * nn);
  return out;
}

NumericOptimum solve_theta_numeric(int n, Boundary bc) {
  if (n != kSites || bc != Boundary::Periodic)
    throw DomainError("numeric theta optimization supports only the 4-site periodic ring");
  const ComplexMatrix h = heisenberg::hamiltonian(kSites, Boundary::Periodic);
  int evaluations = 0;
  auto energy = [&](double theta) {
    ++evaluations;
    return optimize_ratio(theta, h).energy;
  };

  // E(theta) has period pi/2; scan one period.
  constexpr int kGrid = 64;
  const double lo = -kPi / 4.0;
  const double step = (kPi / 2.0) / kGrid;
  int best = 0;
  double best_e = energy(lo);
  for (int k = 1; k < kGrid; ++k) {
    const double e = energy(lo + k * step);
    if (e < best_e) {
      best_e = e;
      best = k;
    }
  }

  // Golden section down to where energy differences are still resolvable.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo + (best - 1) * step;
  double b = lo + (best + 1) * step;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = energy(x1);
  double f2 = energy(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = energy(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = energy(x2);
    }
  }

  // Polish on the analytic gradient; the bracket must straddle a sign change.
  auto gradient = [&](double theta) {
    ++evaluations;
    return optimize_ratio(theta, h).gradient;
  };
  double ga = gradient(a);
  double gb = gradient(b);
  for (int widen = 0; widen < 20 && !(ga <= 0.0 && gb >= 0.0); ++widen) {
    const double w = b - a;
    a -= w;
    b += w;
    ga = gradient(a);
    gb = gradient(b);
  }
  if (!(ga <= 0.0 && gb >= 0.0)) throw NumericError("could not bracket the energy minimum in theta");
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (gradient(mid) < 0.0)
      a = mid;
    else
      b = mid;
  }

  const double theta = 0.5 * (a + b);
  const ThetaPoint point = optimize_ratio(theta, h);
  const auto ground = heisenberg::ground_state(kSites, Boundary::Periodic);
  NumericOptimum out;
  out.solution = {theta, point.r, std::sin(-2.0 * theta), std::cos(-2.0 * theta)};
  out.energy = point.energy;
  out.fidelity = fidelity(point.state, ground.state);
  out.evaluations = evaluations;
  return out;
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw DomainError("fidelity of a zero vector");
  const double f = std::norm(inner(a, b)) / (na * na * nb * nb);
  return std::clamp(f, 0.0, 1.0);
}

std::vector<double> schmidt_spectrum(const ComplexVector& psi, int cut) {
  const std::size_t dim = psi.dim();
  if (!std::has_single_bit(dim) || dim < 2) throw ShapeError("state dimension must be a power of two >= 2");
  const int n = std::countr_zero(dim);
  if (cut < 1 || cut >= n) throw ShapeError("cut must lie in [1, n-1]");
  const std::size_t left = std::size_t{1} << cut;
  const std::size_t right = dim / left;
  const ComplexMatrix m(left, right, std::vector<Complex>(psi.entries().begin(), psi.entries().end()));
  const SvdResult s = svd(m);
  double total = 0.0;
  for (double x : s.singular) total += x * x;
  if (total == 0.0) throw DomainError("entropy of the zero vector");
  std::vector<double> p;
  for (double x : s.singular) {
    const double w = x * x / total;
    if (w >= 1e-15) p.push_back(w);
  }
  double kept = 0.0;
  for (double w : p) kept += w;
  for (double& w : p) w /= kept;
  return p;
}

double entanglement_entropy(const ComplexVector& psi, int cut) {
  const std::vector<double> p = schmidt_spectrum(psi, cut);
  if (p.size() == 1) return 0.0;
  double s = 0.0;
  for (double w : p) s -= w * std::log(w);
  return s;
}

double nu_fit_residual(Complex nu) {
  const auto [b, c] = gates::bc(nu);
  return std::abs(b * b + c * c + 4.0 * b * c);
}

NuFit solve_nu_fit() {
  // 2bc : (b^2+c^2) = 1 : -2  <=>  b^2 + c^2 + 4bc = 0; with b = 2i/(nu+2i),
  // c = nu/(nu+2i), multiplying by (nu+2i)^2 gives nu^2 + 8i nu - 4 = 0.
  const Complex p = 8.0 * kI;
  const Complex q = -4.0;
  const Complex disc = std::sqrt(p * p - 4.0 * q);
  NuFit fit;
  fit.roots = {(-p + disc) / 2.0, (-p - disc) / 2.0};
  const double r3 = 2.0 * std::sqrt(3.0);
  fit.literal_values = {Complex(r3, -4.0), Complex(-r3, -4.0)};
  for (std::size_t k = 0; k < 2; ++k) {
    fit.root_residuals[k] = nu_fit_residual(fit.roots[k]);
    fit.literal_residuals[k] = nu_fit_residual(fit.literal_values[k]);
    fit.b_at_literal[k] = gates::bc(fit.literal_values[k]).b;
  }
  return fit;
}

namespace {

std::vector<double> sweep_grid(double theta_min, double theta_max, int steps) {
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max)) throw DomainError("sweep bounds must be finite");
  if (theta_min > theta_max) throw DomainError("sweep: theta_min exceeds theta_max");
  if (steps < 1) throw DomainError("sweep: steps must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k)
    grid[static_cast<std::size_t>(k)] =
        steps == 1 ? theta_min : theta_min + (theta_max - theta_min) * k / (steps - 1);
  return grid;
}

SweepRow sweep_point(double theta, const ComplexMatrix& h, const ComplexVector& ground) {
  const ThetaPoint p = optimize_ratio(theta, h);
  return {theta, p.r, p.energy, fidelity(p.state, ground), entanglement_entropy(p.state, 2)};
}

}  // namespace

std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps) {
  const auto grid = sweep_grid(theta_min, theta_max, steps);
  const ComplexMatrix h = heisenberg::hamiltonian(kSites, Boundary::Periodic);
  const ComplexVector ground = heisenberg::ground_state(kSites, Boundary::Periodic).state;
  std::vector<SweepRow> rows(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    rows[i] = sweep_point(grid[i], h, ground);
  }
  return rows;
}

namespace serial {

std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps) {
  const auto grid = sweep_grid(theta_min, theta_max, steps);
  const ComplexMatrix h = heisenberg::hamiltonian(kSites, Boundary::Periodic);
  const ComplexVector ground = heisenberg::ground_state(kSites, Boundary::Periodic).state;
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double theta : grid) rows.push_back(sweep_point(theta, h, ground));
  return rows;
}

}  // namespace serial

}  // namespace meralab::mera
