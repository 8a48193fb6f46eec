#include "meralab/wavelet.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "meralab/gates.hpp"

namespace meralab::wavelet {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ScalingFilter::sum() const { return taps[0] + taps[1] + taps[2] + taps[3]; }

double ScalingFilter::energy() const {
  return taps[0] * taps[0] + taps[1] * taps[1] + taps[2] * taps[2] + taps[3] * taps[3];
}

double ScalingFilter::shift2_overlap() const { return taps[0] * taps[2] + taps[1] * taps[3]; }

double ScalingFilter::alternating_sum() const { return taps[0] - taps[1] + taps[2] - taps[3]; }

double ScalingFilter::first_moment() const { return -taps[1] + 2.0 * taps[2] - 3.0 * taps[3]; }

ScalingFilter lattice_filter(double theta1) {
  const double theta2 = kPi / 4.0 - theta1;
  // Stage one: (cos, sin) weights of the even/odd branch.
  const std::array<double, 2> branch{std::cos(theta1), std::sin(theta1)};
  // Stage two: rows of the second rotation, one per branch.
  const double c = std::cos(theta2);
  const double s = std::sin(theta2);
  const std::array<std::array<double, 2>, 2> mix{{{c, s}, {-s, c}}};
  ScalingFilter f;
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t k = 0; k < 2; ++k) f.taps[2 * m + k] = branch[m] * mix[m][k];
  return f;
}

ScalingFilter d4_coefficients() {
  const double r3 = std::sqrt(3.0);
  const double scale = 1.0 / (4.0 * std::sqrt(2.0));
  return {{(1.0 + r3) * scale, (3.0 + r3) * scale, (3.0 - r3) * scale, (1.0 - r3) * scale}};
}

double d4_lattice_angle() { return -kPi / 12.0; }

AngleReport angle_report(double theta_star, double bethe_root) {
  AngleReport r;
  r.theta_star = theta_star;
  r.minus_pi_12 = -kPi / 12.0;
  r.theta_star_minus_pi_12 = theta_star - r.minus_pi_12;
  r.bethe_angle = std::atan(bethe_root);
  r.two_theta = 2.0 * theta_star;
  r.phi_minus_two_abs_theta = r.bethe_angle - 2.0 * std::abs(theta_star);
  const std::complex<double> nu(2.0 * std::sqrt(3.0), -4.0);
  r.arg_b_literal = std::arg(gates::bc(nu).b);
  r.arg_b_minus_half_pi = r.arg_b_literal - kPi / 2.0;
  r.d4_lattice_angle = d4_lattice_angle();
  return r;
}

}  // namespace meralab::wavelet
