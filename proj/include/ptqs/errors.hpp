// errors.hpp - exception types for domain-rule violations. Configuration
// mistakes and physics-domain rejections are kept distinct so the CLI can
// map them to different exit codes.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ptqs {

// Matrix inverse requested below the singularity tolerance.
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symmetric-form Hamiltonian requested with an off-grid off-diagonal phase.
struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral decomposition requested in the broken phase; carries the
// complex-conjugate eigenvalue pair.
struct BrokenPhase : std::runtime_error {
  std::complex<double> e_plus;
  std::complex<double> e_minus;
  BrokenPhase(const std::string& msg, std::complex<double> ep,
              std::complex<double> em)
      : std::runtime_error(msg), e_plus(ep), e_minus(em) {}
};

// Parameters sit on the eigenvalue-degeneracy locus, where the eigensystem
// is incomplete and the derived operators diverge.
struct ExceptionalPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A transition probability was requested with an inner product that is not
// positive definite, so no normalization exists.
struct NonPositiveProduct : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Oscillation parameters violate the reality bound on the spectrum.
struct UnbrokenViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvector pairs handed to the metric constructor fail biorthonormality.
struct BiorthogonalityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unparsable or out-of-range configuration input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptqs
