// neutrino.hpp - two-flavor vacuum oscillations driven by the PT-symmetric
// non-Hermitian Hamiltonian, in experimental units: mass-squared splittings
// in eV^2, beam energy in GeV, baselines in km.
#pragma once

#include <vector>

#include "ptqs/pt.hpp"

namespace ptqs::neutrino {

using linalg::Complex;
using linalg::ComplexMat2;
using linalg::ComplexVec2;

// hbar*c = 197.3269804 MeV*fm expressed in eV*km.
inline constexpr double kHbarCEvKm = 1.973269804e-10;

// Phase coefficient for dm2[eV^2] * L[km] / E[GeV], the familiar ~1.27.
// Exact value 1e-9 / (4 hbar c) is used throughout; the rounded form is a
// display convention only.
inline constexpr double kOscillationK = 1.0e-9 / (4.0 * kHbarCEvKm);

// Dimensionless evolution time per km of baseline when the Hamiltonian is
// expressed in eV^2/GeV. Converts the unit-free evolution of the transitions
// module to physical baselines.
inline constexpr double kTimePerKm = 4.0 * kOscillationK;

// 0 to 2000 km in 2001 uniform points, covering at least two full
// oscillation periods at the benchmark parameters below.
std::vector<double> default_baseline_grid();

// Physical parameters. Defaults are the atmospheric benchmark: maximal
// mixing, dm2_32 = 2.5e-3 eV^2, sigma = 0, E = 1 GeV.
struct OscillationConfig {
  double delta_m2_32 = 2.5e-3;  // m3^2 - m2^2, eV^2
  double m2_bar = 0.0;          // m2^2 + m3^2, eV^2; common phase only
  double rho = 0.0;             // non-Hermitian diagonal magnitude, eV^2
  double sigma = 0.0;           // non-Hermitian off-diagonal shift, eV^2
  double varphi = 0.0;          // non-Hermitian diagonal phase, radians
  double energy = 1.0;          // beam energy, GeV
  std::vector<double> baselines = default_baseline_grid();  // km

  // Throws ConfigError for non-finite or non-physical entries and
  // UnbrokenViolation when |rho sin(varphi)| exceeds |delta_m2_32 + sigma|.
  void validate() const;
};

// Quantities derived from a valid config.
//   alpha_prime              mixing angle, sin = rho sin(varphi)/(dm2+sigma)
//   beta_prime_phase_per_km  full oscillation phase accumulated per km,
//                            2 K cos(alpha') (dm2+sigma)/E
//   omega_plus/minus         energy eigenvalues in eV^2/GeV
struct OscDerived {
  double alpha_prime = 0.0;
  double beta_prime_phase_per_km = 0.0;
  double omega_plus = 0.0;
  double omega_minus = 0.0;
};

// Survival and appearance probabilities over a baseline grid. The two
// columns are exact complements.
struct ProbabilityCurve {
  std::vector<double> baseline_km;
  std::vector<double> p_mumu;
  std::vector<double> p_mutau;
};

// One survival curve tagged by the phase-shift angle that produced it.
struct PhaseShiftCurve {
  double alpha_prime = 0.0;
  ProbabilityCurve curve;
};

// The CPT-projected flavor states, mu first.
struct CptFlavorStates {
  ComplexVec2 nu_mu_tilde;
  ComplexVec2 nu_tau_tilde;
};

// Hermitian vacuum Hamiltonian: the mass matrix rotated by theta23, divided
// by 2E. Units eV^2/GeV.
ComplexMat2 build_vacuum_hamiltonian(double theta23, double m2_2, double m2_3,
                                     double energy);

// Vacuum part at maximal mixing plus the PT-symmetric correction block,
// all divided by 4E. Hermitian iff varphi = 0.
ComplexMat2 build_pt_hamiltonian(const OscillationConfig& cfg);

// The same Hamiltonian expressed in the canonical two-level parameters
// (rho, sigma, varphi of the unit-free modules), in eV^2/GeV.
pt::PTParams natural_block_params(const OscillationConfig& cfg);

// Throws ExceptionalPoint when |rho sin(varphi)| = |delta_m2_32 + sigma|
// within tolerance, in addition to validate()'s errors.
OscDerived derive_osc_params(const OscillationConfig& cfg);

// P_mumu(L) = 1 - sin^2(alpha'/2 - Phi(L)) with Phi the accumulated
// half-phase; appearance is the exact complement.
double survival_probability(const OscillationConfig& cfg, double L_km);
double appearance_probability(const OscillationConfig& cfg, double L_km);

// Curve over cfg.baselines with the phase-shift angle fixed directly
// instead of being derived from (rho, varphi). Accepts the full closed
// range [-pi/2, pi/2]; at |alpha'| = pi/2 the curve is constant.
ProbabilityCurve curve_for_alpha_prime(const OscillationConfig& cfg,
                                       double alpha_prime);

// The four standard curves at alpha' = 0, pi/6, pi/4, pi/2 over the
// config's grid and couplings.
std::vector<PhaseShiftCurve> benchmark_curve_set(const OscillationConfig& cfg);

// CPT-projected flavor states (u + CPT u)/2 in the neutrino labeling.
CptFlavorStates cpt_flavor_states_neutrino(const pt::SpectralData& spec);

}  // namespace ptqs::neutrino
