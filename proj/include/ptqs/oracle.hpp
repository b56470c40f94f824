// oracle.hpp - independent brute-force cross-checks of the closed-form
// paths: series matrix-exponential evolution, characteristic-polynomial
// eigenvalues, biorthogonal outer-product metric assembly, and numeric
// time derivatives of inner-product norms. These deliberately share no
// code with the primary paths beyond core arithmetic.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ptqs/pt.hpp"

namespace ptqs::oracle {

using linalg::Complex;
using linalg::ComplexMat2;
using linalg::ComplexVec2;

// One comparison between a closed-form quantity and its independent
// recomputation. For vector or matrix quantities the values are largest
// entry magnitudes and the difference is the largest entrywise deviation.
struct OracleReport {
  std::string name;
  double primary = 0.0;
  double oracle = 0.0;
  double difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

OracleReport make_report(std::string name, double primary, double oracle,
                         double difference, double tolerance);

// Line-delimited serialization, one report per line, deterministic.
std::string to_line(const OracleReport& report);

// exp(-i H t) applied to state, via the scaled Taylor series. Valid in any
// phase, including broken.
ComplexVec2 evolve_by_series(const ComplexMat2& H, const ComplexVec2& state,
                             double t);

// Quadratic-formula roots of det(H - lambda I), principal square root;
// the first element carries the + branch.
std::pair<Complex, Complex> eigen_by_charpoly(const ComplexMat2& H);

// Metric as the outer-product sum over left eigenvectors. Requires the
// pairs to be biorthonormal to 1e-10, else throws BiorthogonalityViolation.
ComplexMat2 metric_from_eigvecs(const ComplexVec2& u_plus,
                                const ComplexVec2& u_minus,
                                const ComplexVec2& phi_plus,
                                const ComplexVec2& phi_minus);

// Central-difference d/dt of <psi(t)|eta|psi(t)> (fourth-order stencil,
// step scaled to the Hamiltonian) against the analytic rate
// i psi^dag (H^dag eta - eta H) psi.
OracleReport numeric_time_derivative_check(const ComplexMat2& H,
                                           const ComplexMat2& eta,
                                           const ComplexVec2& state, double t,
                                           double tolerance = 1e-8);

// Portable uniform deviate in [0, 1): top 53 bits of the engine output.
// Avoids std::uniform_real_distribution, whose output is unspecified
// across standard libraries.
double uniform_unit(std::mt19937_64& rng);

// Random parameters with rho, sigma in [0.1, 3] and varphi in (-pi, pi),
// accepted only when the discriminant clears margin * sigma^2. The margin
// keeps draws far enough from eigenvalue coalescence that entrywise
// closed-form comparisons stay above the double-precision floor.
pt::PTParams draw_unbroken(std::mt19937_64& rng, double margin = 1e-2);

// Runs every oracle over the given number of random draws and returns one
// aggregated report per check, carrying the worst deviation seen. The
// override replaces each check's default tolerance when present.
std::vector<OracleReport> run_verification_suite(
    std::size_t draws, std::uint64_t seed,
    std::optional<double> tolerance_override = std::nullopt);

}  // namespace ptqs::oracle
