#include "meralab/bethe.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "meralab/errors.hpp"

namespace meralab::bethe {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPoleDistance = 1e-10;
constexpr double kPi = std::numbers::pi;

void require_real(const std::vector<Complex>& roots) {
  for (const auto& l : roots)
    if (l.imag() != 0.0) throw DomainError("only real rapidities are supported here");
}

// Continuous phase of (l+i)/(l-i) for real l: 2 atan2(1, l), in (0, 2pi).
double phase(double l) { return 2.0 * std::atan2(1.0, l); }

}  // namespace

std::vector<Complex> bethe_residual(const std::vector<Complex>& roots, int length) {
  if (length < 1) throw DomainError("chain length must be positive");
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (std::abs(roots[j] - kI) < kPoleDistance || std::abs(roots[j] + kI) < kPoleDistance)
      throw DomainError("rapidity at a pole +-i");
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k == j) continue;
      const Complex d = roots[j] - roots[k];
      if (std::abs(d - 2.0 * kI) < kPoleDistance || std::abs(d + 2.0 * kI) < kPoleDistance)
        throw DomainError("rapidity pair separated by a scattering pole +-2i");
    }
  }
  std::vector<Complex> out;
  out.reserve(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const Complex lhs = std::pow((roots[j] + kI) / (roots[j] - kI), length);
    Complex rhs = 1.0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k == j) continue;
      const Complex d = roots[j] - roots[k];
      rhs *= (d + 2.0 * kI) / (d - 2.0 * kI);
    }
    out.push_back(lhs - rhs);
  }
  return out;
}

double max_residual(const std::vector<Complex>& roots, int length) {
  double worst = 0.0;
  for (const auto& r : bethe_residual(roots, length)) worst = std::max(worst, std::abs(r));
  return worst;
}

BetheRoots solve_two_magnon(int length, double initial) {
  if (length < 3) throw DomainError("two-magnon solver needs L >= 3");
  // Log form for lambda_1 = -lambda_2 = x:
  //   F(x) = L phase(x) - phase_pair(2x) - 2 pi I,
  // where phase_pair(d) = 2 atan2(2, d) is the phase of (d+2i)/(d-2i).
  auto raw = [&](double x) { return length * phase(x) - 2.0 * std::atan2(2.0, 2.0 * x); };
  auto derivative = [&](double x) {
    return -2.0 * length / (1.0 + x * x) + 2.0 * 2.0 * 2.0 / (4.0 + 4.0 * x * x);
  };
  const double branch = std::round(raw(initial) / (2.0 * kPi));

  double x = initial;
  for (int it = 0; it < 100; ++it) {
    const double f = raw(x) - 2.0 * kPi * branch;
    const double df = derivative(x);
    if (df == 0.0) break;
    const double dx = f / df;
    x -= dx;
    if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) {
      BetheRoots out{length, {Complex(x, 0.0), Complex(-x, 0.0)}, 0.0};
      out.residual_norm = max_residual(out.roots, length);
      return out;
    }
  }
  throw NumericError("two-magnon Newton iteration did not converge in 100 steps");
}

std::vector<double> momenta_from_roots(const std::vector<Complex>& roots) {
  require_real(roots);
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& l : roots) {
    double p = std::arg((l + kI) / (l - kI));
    if (p <= -kPi) p += 2.0 * kPi;
    out.push_back(p);
  }
  return out;
}

double energy_from_roots(const std::vector<Complex>& roots, int length) {
  require_real(roots);
  double e = length / 4.0;
  for (const auto& l : roots) e -= 2.0 / (l.real() * l.real() + 1.0);
  return e;
}

std::vector<MagnonState> one_magnon_states(int length) {
  if (length < 1) throw DomainError("chain length must be positive");
  std::vector<MagnonState> out;
  for (int k = 0; k < length; ++k) {
    double p = 2.0 * kPi * k / length;
    if (p > kPi) p -= 2.0 * kPi;
    MagnonState m;
    m.momentum = p;
    if (k == 0) {
      m.rapidity = std::numeric_limits<double>::infinity();
      m.energy = length / 4.0;
    } else {
      // e^{ip} = (l+i)/(l-i)  =>  l = cot(p/2)
      m.rapidity = 1.0 / std::tan(p / 2.0);
      m.energy = energy_from_roots({Complex(m.rapidity, 0.0)}, length);
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace meralab::bethe
