// pt.hpp - construction of the two-level non-Hermitian Hamiltonians with
// combined parity/time-reversal symmetry, phase classification, and the
// derived operator suite (eigensystem, mixing matrix, metric, symmetry
// operator, similarity map to the Hermitian picture).
#pragma once

#include "ptqs/errors.hpp"
#include "ptqs/linalg.hpp"

namespace ptqs::pt {

using linalg::Complex;
using linalg::ComplexMat2;
using linalg::ComplexVec2;

// The parity operator in the flavor basis: swaps the two components.
ComplexMat2 parity();

// The four real Hamiltonian parameters. varphi is the diagonal phase,
// phi_offdiag the off-diagonal one (zero in the symmetric form).
struct PTParams {
  double rho = 0.0;
  double sigma = 0.0;
  double varphi = 0.0;
  double phi_offdiag = 0.0;

  PTParams() = default;
  PTParams(double rho_, double sigma_, double varphi_,
           double phi_offdiag_ = 0.0);
};

// Phase of the symmetry: real spectrum (unbroken), degenerate boundary
// (exceptional), or complex-conjugate pair (broken). The discriminant is
// sigma^2 - rho^2 sin^2(varphi).
struct PTPhase {
  enum class Tag { Unbroken, Exceptional, Broken };
  Tag tag = Tag::Unbroken;
  double discriminant = 0.0;
};

const char* to_string(PTPhase::Tag tag);

// Full derived-operator suite for an unbroken-phase Hamiltonian.
//   E_plus/E_minus  real eigenvalues, E_plus >= E_minus
//   alpha           mixing angle, sin(alpha) = rho sin(varphi)/sigma
//   u_plus/u_minus  eigenvectors in the fixed phase convention
//   A, A_inv        flavor<->energy basis change (A_inv columns are u_pm;
//                   A_inv = A in this convention)
//   eta_plus        positive-definite metric, eta H eta^-1 = H^dagger
//   C               symmetry operator, C^2 = 1, [C, H] = 0
//   G               similarity map to the Hermitian picture, G^2 = eta_plus
//   H_prime         G H G^-1, real symmetric
//   V               orthogonal diagonalizer of H_prime; A = V G
//   beta            eigenvalue splitting E_plus - E_minus
struct SpectralData {
  double E_plus = 0.0;
  double E_minus = 0.0;
  double alpha = 0.0;
  ComplexVec2 u_plus;
  ComplexVec2 u_minus;
  ComplexMat2 A;
  ComplexMat2 A_inv;
  ComplexMat2 eta_plus;
  ComplexMat2 C;
  ComplexMat2 G;
  ComplexMat2 H_prime;
  ComplexMat2 V;
  double beta = 0.0;
};

// Pieces of the Hermitian-equivalent picture, returned together.
struct HermitianEquivalent {
  ComplexMat2 G;
  ComplexMat2 H_prime;
  ComplexMat2 V;
  ComplexVec2 u_prime_plus;
  ComplexVec2 u_prime_minus;
};

// [[rho e^{i varphi}, sigma e^{i phi}], [sigma e^{-i phi}, rho e^{-i varphi}]]
ComplexMat2 build_general_hamiltonian(const PTParams& p);

// Symmetric form: phi_offdiag restricted to integer multiples of pi.
// Throws NotSymmetric otherwise.
ComplexMat2 build_symmetric_hamiltonian(const PTParams& p);

// Sign of the discriminant against a scale-relative tolerance
// 1e-10 * max(sigma^2, rho^2). The sigma = 0, sin(varphi) = 0 corner is a
// diagonal Hermitian matrix and classifies as unbroken.
PTPhase classify_phase(const PTParams& p);

// Full decomposition; requires the unbroken phase strictly. Throws
// BrokenPhase (with the complex eigenvalue pair) or ExceptionalPoint.
SpectralData spectral_decompose(const ComplexMat2& H, const PTParams& p);

// [[sec a, -i tan a], [i tan a, sec a]]; the inverse of the eigenvector
// completeness sum.
ComplexMat2 build_metric(const SpectralData& spec);

// [[i tan a, sec a], [sec a, -i tan a]] = P eta_plus = eta_plus^-1 P.
ComplexMat2 build_c_operator(const SpectralData& spec);

// G, H', V, and the primed basis vectors (1, +-1)/sqrt(2).
HermitianEquivalent build_hermitian_equivalent(const SpectralData& spec);

}  // namespace ptqs::pt
