#pragma once

#include "meralab/linalg.hpp"

// Circuit elements on spin-1/2 sites. Basis convention throughout the project:
// big-endian, site 1 is the most significant bit, |0> = up, |1> = down, so
// |s1 s2 s3 s4> has index 8*s1 + 4*s2 + 2*s3 + s4.
namespace meralab::gates {

enum class EntanglerFamily { Rotation, RMatrix };

/// Which two-site entangler to use and its parameter: a real angle for
/// Rotation, a (possibly complex) spectral parameter for RMatrix.
class EntanglerSpec {
 public:
  static EntanglerSpec rotation(double theta);
  /// Throws DomainError at the pole nu = -2i.
  static EntanglerSpec rmatrix(Complex nu);

  EntanglerFamily family() const { return family_; }
  Complex parameter() const { return parameter_; }
  double theta() const { return parameter_.real(); }

 private:
  EntanglerSpec(EntanglerFamily f, Complex p) : family_(f), parameter_(p) {}
  EntanglerFamily family_;
  Complex parameter_;
};

struct BCFunctions {
  Complex b;
  Complex c;
};

ComplexMatrix entangler_rotation(double theta);
/// d/dtheta of entangler_rotation.
ComplexMatrix entangler_rotation_derivative(double theta);
ComplexMatrix swap();

/// b = 2i/(nu+2i), c = nu/(nu+2i). DomainError near the pole.
BCFunctions bc(Complex nu);
ComplexMatrix rmatrix(Complex nu);

/// The 4x4 gate for a spec.
ComplexMatrix entangler(const EntanglerSpec& spec);

/// I^(j-1) (x) gate (x) I^(n-j-1) for a two-site gate at 1-based position j.
ComplexMatrix embed(const ComplexMatrix& gate, int site, int n);

/// S (x) S (x) ... on n (even) sites.
ComplexMatrix swap_layer(int n);

/// Entanglers at positions 1..2^k-1 on 2^k sites, multiplied so that U_1
/// acts first: T = U_m ... U_2 U_1. Only disjoint factors commute, so for
/// k >= 2 this ordering is part of the definition.
ComplexMatrix monodromy(const EntanglerSpec& spec, int level);

/// Same gates multiplied in the opposite order (U_1 U_2 ... U_m).
ComplexMatrix monodromy_reversed(const EntanglerSpec& spec, int level);

/// Operator-Schmidt regrouping of a two-site gate: G[(s2 s3),(a b)] becomes
/// M[(s2 a),(s3 b)].
ComplexMatrix operator_schmidt_matrix(const ComplexMatrix& gate);

}  // namespace meralab::gates
