#pragma once

#include <array>

namespace meralab::wavelet {

/// Four-tap lowpass analysis filter, leftmost tap first.
struct ScalingFilter {
  std::array<double, 4> taps{};

  double sum() const;
  double energy() const;             // sum of squares
  double shift2_overlap() const;     // taps[0]taps[2] + taps[1]taps[3]
  double alternating_sum() const;    // sum (-1)^k taps[k]
  double first_moment() const;       // sum (-1)^k k taps[k]
};

/// Two-rotation lattice. The first rotation (theta1) splits weight between
/// the even and odd delay branches, the second (theta2 = pi/4 - theta1)
/// mixes each branch; the DC rule theta1 + theta2 = pi/4 fixes sum = sqrt2.
ScalingFilter lattice_filter(double theta1);

/// Daubechies D4: (1+sqrt3, 3+sqrt3, 3-sqrt3, 1-sqrt3) / (4 sqrt2).
ScalingFilter d4_coefficients();

/// Lattice angle that reproduces D4 (the first moment vanishes there).
double d4_lattice_angle();

struct AngleReport {
  double theta_star = 0.0;
  double minus_pi_12 = 0.0;
  double theta_star_minus_pi_12 = 0.0;  // theta_star - (-pi/12)
  double bethe_angle = 0.0;             // phi with tan(phi) = bethe_root
  double two_theta = 0.0;               // 2 theta_star
  double phi_minus_two_abs_theta = 0.0; // phi - 2|theta_star|
  double arg_b_literal = 0.0;             // arg b at nu = -4i + 2 sqrt3
  double arg_b_minus_half_pi = 0.0;     // arg b - pi/2, compared against phi
  double d4_lattice_angle = 0.0;
};

AngleReport angle_report(double theta_star, double bethe_root);

}  // namespace meralab::wavelet
