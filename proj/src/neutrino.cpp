#include "ptqs/neutrino.hpp"

#include <cmath>
#include <sstream>

#include "ptqs/errors.hpp"
#include "ptqs/transitions.hpp"

namespace ptqs::neutrino {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double coupling_of(const OscillationConfig& cfg) {
  return cfg.delta_m2_32 + cfg.sigma;
}

// Discriminant of the two-level block in eV^4 and the tolerance that
// decides whether the config sits on the eigenvalue-coalescence locus.
double block_discriminant(const OscillationConfig& cfg) {
  const double offd = cfg.rho * std::sin(cfg.varphi);
  const double c = coupling_of(cfg);
  return c * c - offd * offd;
}

double block_tolerance(const OscillationConfig& cfg) {
  const double c = coupling_of(cfg);
  return 1e-10 * std::max(c * c, cfg.rho * cfg.rho);
}

}  // namespace

std::vector<double> default_baseline_grid() {
  std::vector<double> grid(2001);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i);
  return grid;
}

void OscillationConfig::validate() const {
  const double fields[] = {delta_m2_32, m2_bar, rho, sigma, varphi, energy};
  for (double f : fields)
    if (!std::isfinite(f)) throw ConfigError("oscillation config: non-finite parameter");
  if (energy <= 0.0) throw ConfigError("oscillation config: energy must be positive (GeV)");
  for (double L : baselines)
    if (!std::isfinite(L) || L < 0.0)
      throw ConfigError("oscillation config: baselines must be non-negative (km)");
  const double offd = std::abs(rho * std::sin(varphi));
  const double bound = std::abs(coupling_of(*this));
  if (offd > bound) {
    std::ostringstream msg;
    msg << "oscillation config: symmetry-breaking bound violated, need "
        << "|rho sin(varphi)| <= |delta_m2_32 + sigma| = " << bound
        << " eV^2 but got " << offd << " eV^2";
    throw UnbrokenViolation(msg.str());
  }
}

ComplexMat2 build_vacuum_hamiltonian(double theta23, double m2_2, double m2_3,
                                     double energy) {
  if (!(energy > 0.0)) throw ConfigError("vacuum hamiltonian: energy must be positive");
  const double c = std::cos(theta23);
  const double s = std::sin(theta23);
  const double inv2e = 1.0 / (2.0 * energy);
  // R diag(m2_2, m2_3) R^T with R the active rotation by theta23.
  return {(c * c * m2_2 + s * s * m2_3) * inv2e, c * s * (m2_3 - m2_2) * inv2e,
          c * s * (m2_3 - m2_2) * inv2e, (s * s * m2_2 + c * c * m2_3) * inv2e};
}

ComplexMat2 build_pt_hamiltonian(const OscillationConfig& cfg) {
  cfg.validate();
  const double inv4e = 1.0 / (4.0 * cfg.energy);
  const Complex diag =
      (cfg.m2_bar + cfg.rho * std::polar(1.0, cfg.varphi)) * inv4e;
  const Complex offd = coupling_of(cfg) * inv4e;
  return {diag, offd, offd, std::conj(diag)};
}

pt::PTParams natural_block_params(const OscillationConfig& cfg) {
  cfg.validate();
  const double inv4e = 1.0 / (4.0 * cfg.energy);
  const double re = (cfg.m2_bar + cfg.rho * std::cos(cfg.varphi)) * inv4e;
  const double im = cfg.rho * std::sin(cfg.varphi) * inv4e;
  const double rho_n = std::hypot(re, im);
  const double varphi_n = rho_n == 0.0 ? 0.0 : std::atan2(im, re);
  return {rho_n, coupling_of(cfg) * inv4e, varphi_n};
}

OscDerived derive_osc_params(const OscillationConfig& cfg) {
  cfg.validate();
  const double disc = block_discriminant(cfg);
  if (std::abs(disc) <= block_tolerance(cfg))
    throw ExceptionalPoint(
        "oscillation parameters sit on the eigenvalue-coalescence locus: "
        "|rho sin(varphi)| = |delta_m2_32 + sigma|");
  const double c = coupling_of(cfg);
  OscDerived d;
  d.alpha_prime = std::asin(cfg.rho * std::sin(cfg.varphi) / c);
  d.beta_prime_phase_per_km =
      2.0 * kOscillationK * std::cos(d.alpha_prime) * c / cfg.energy;
  const double mid = cfg.m2_bar + cfg.rho * std::cos(cfg.varphi);
  const double root = std::sqrt(disc);
  d.omega_plus = (mid + root) / (4.0 * cfg.energy);
  d.omega_minus = (mid - root) / (4.0 * cfg.energy);
  return d;
}

double survival_probability(const OscillationConfig& cfg, double L_km) {
  const OscDerived d = derive_osc_params(cfg);
  const double s =
      std::sin(0.5 * d.alpha_prime - 0.5 * d.beta_prime_phase_per_km * L_km);
  return 1.0 - s * s;
}

double appearance_probability(const OscillationConfig& cfg, double L_km) {
  return 1.0 - survival_probability(cfg, L_km);
}

ProbabilityCurve curve_for_alpha_prime(const OscillationConfig& cfg,
                                       double alpha_prime) {
  cfg.validate();
  if (!std::isfinite(alpha_prime) || std::abs(alpha_prime) > kPi / 2.0)
    throw ConfigError("alpha_prime must lie in [-pi/2, pi/2]");
  const double half_phase_per_km = kOscillationK * std::cos(alpha_prime) *
                                   coupling_of(cfg) / cfg.energy;
  ProbabilityCurve curve;
  curve.baseline_km = cfg.baselines;
  curve.p_mumu.reserve(cfg.baselines.size());
  curve.p_mutau.reserve(cfg.baselines.size());
  for (double L : cfg.baselines) {
    const double s = std::sin(0.5 * alpha_prime - half_phase_per_km * L);
    const double p = 1.0 - s * s;
    curve.p_mumu.push_back(p);
    curve.p_mutau.push_back(1.0 - p);
  }
  return curve;
}

std::vector<PhaseShiftCurve> benchmark_curve_set(const OscillationConfig& cfg) {
  std::vector<PhaseShiftCurve> out;
  for (double ap : {0.0, kPi / 6.0, kPi / 4.0, kPi / 2.0})
    out.push_back({ap, curve_for_alpha_prime(cfg, ap)});
  return out;
}

CptFlavorStates cpt_flavor_states_neutrino(const pt::SpectralData& spec) {
  return {transitions::cpt_eigenstate(spec, transitions::Flavor::A),
          transitions::cpt_eigenstate(spec, transitions::Flavor::B)};
}

}  // namespace ptqs::neutrino
