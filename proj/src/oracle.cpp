#include "ptqs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ptqs/errors.hpp"
#include "ptqs/transitions.hpp"

namespace ptqs::oracle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kFdStep = 1e-3;

double metric_norm(const ComplexMat2& eta, const ComplexVec2& v) {
  return linalg::hermitian_dot(v, eta * v).real();
}

// Tracks the single worst comparison across draws.
struct Worst {
  double primary = 0.0;
  double oracle = 0.0;
  double difference = -1.0;

  void update(double p, double o, double d) {
    if (d > difference) {
      primary = p;
      oracle = o;
      difference = d;
    }
  }
};

}  // namespace

OracleReport make_report(std::string name, double primary, double oracle,
                         double difference, double tolerance) {
  OracleReport r;
  r.name = std::move(name);
  r.primary = primary;
  r.oracle = oracle;
  r.difference = difference;
  r.tolerance = tolerance;
  r.pass = difference <= tolerance;
  return r;
}

std::string to_line(const OracleReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "name=%s status=%s primary=%.12g oracle=%.12g diff=%.3e "
                "tol=%.3e",
                report.name.c_str(), report.pass ? "PASS" : "FAIL",
                report.primary, report.oracle, report.difference,
                report.tolerance);
  return buf;
}

ComplexVec2 evolve_by_series(const ComplexMat2& H, const ComplexVec2& state,
                             double t) {
  return linalg::mat_exp(H, Complex(0.0, -t)) * state;
}

std::pair<Complex, Complex> eigen_by_charpoly(const ComplexMat2& H) {
  const Complex tr = linalg::trace(H);
  const Complex sq = std::sqrt(tr * tr - 4.0 * linalg::det(H));
  return {0.5 * (tr + sq), 0.5 * (tr - sq)};
}

ComplexMat2 metric_from_eigvecs(const ComplexVec2& u_plus,
                                const ComplexVec2& u_minus,
                                const ComplexVec2& phi_plus,
                                const ComplexVec2& phi_minus) {
  const double dev = std::max(
      {std::abs(linalg::hermitian_dot(phi_plus, u_plus) - 1.0),
       std::abs(linalg::hermitian_dot(phi_minus, u_minus) - 1.0),
       std::abs(linalg::hermitian_dot(phi_plus, u_minus)),
       std::abs(linalg::hermitian_dot(phi_minus, u_plus))});
  if (dev > 1e-10)
    throw BiorthogonalityViolation(
        "metric_from_eigvecs: left/right eigenvector pairs are not "
        "biorthonormal");
  return linalg::outer(phi_plus, phi_plus) + linalg::outer(phi_minus, phi_minus);
}

OracleReport numeric_time_derivative_check(const ComplexMat2& H,
                                           const ComplexMat2& eta,
                                           const ComplexVec2& state, double t,
                                           double tolerance) {
  // Fourth-order central stencil. The step shrinks with the Hamiltonian
  // scale so the phase advanced per substep stays fixed; this keeps both
  // truncation and rounding well under the default tolerance across the
  // whole sampled parameter range.
  const double h = kFdStep / std::max(1.0, linalg::max_abs(H));
  const auto norm_at = [&](double when) {
    return metric_norm(eta, evolve_by_series(H, state, when));
  };
  const double numeric =
      (-norm_at(t + 2.0 * h) + 8.0 * norm_at(t + h) - 8.0 * norm_at(t - h) +
       norm_at(t - 2.0 * h)) /
      (12.0 * h);
  const ComplexVec2 psi = evolve_by_series(H, state, t);
  const ComplexMat2 obstruction = linalg::adjoint(H) * eta - eta * H;
  const double analytic =
      (Complex(0.0, 1.0) * linalg::hermitian_dot(psi, obstruction * psi)).real();
  return make_report("norm-rate", analytic, numeric,
                     std::abs(analytic - numeric), tolerance);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

pt::PTParams draw_unbroken(std::mt19937_64& rng, double margin) {
  for (;;) {
    const double rho = 0.1 + 2.9 * uniform_unit(rng);
    const double sigma = 0.1 + 2.9 * uniform_unit(rng);
    const double varphi = (2.0 * uniform_unit(rng) - 1.0) * kPi;
    const double offd = rho * std::sin(varphi);
    if (sigma * sigma - offd * offd >= margin * sigma * sigma)
      return {rho, sigma, varphi};
  }
}

std::vector<OracleReport> run_verification_suite(
    std::size_t draws, std::uint64_t seed,
    std::optional<double> tolerance_override) {
  std::mt19937_64 rng(seed);
  Worst evolution, metric, eigenvalues, rate;

  for (std::size_t i = 0; i < draws; ++i) {
    const pt::PTParams p = draw_unbroken(rng);
    const ComplexMat2 H = pt::build_general_hamiltonian(p);
    const pt::SpectralData spec = pt::spectral_decompose(H, p);
    const ComplexVec2 state{
        Complex(2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0),
        Complex(2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0)};
    const double period = 2.0 * kPi / spec.beta;
    const double t = uniform_unit(rng) * period;

    const ComplexVec2 by_spectral = transitions::evolve_vector(spec, state, t);
    const ComplexVec2 by_series = evolve_by_series(H, state, t);
    evolution.update(linalg::max_abs(by_spectral), linalg::max_abs(by_series),
                     linalg::max_abs_diff(by_spectral, by_series));

    // Left eigenvectors recomputed from H^dag by the characteristic
    // polynomial, then scaled to biorthonormality against u_pm. Only this
    // normalization touches the primary path; the directions are
    // independent.
    const ComplexMat2 hdag = linalg::adjoint(H);
    const auto [lp, lm] = eigen_by_charpoly(hdag);
    ComplexVec2 phi_plus{hdag.e01, lp - hdag.e00};
    ComplexVec2 phi_minus{hdag.e01, lm - hdag.e00};
    phi_plus = (1.0 / std::conj(linalg::hermitian_dot(phi_plus, spec.u_plus))) *
               phi_plus;
    phi_minus =
        (1.0 / std::conj(linalg::hermitian_dot(phi_minus, spec.u_minus))) *
        phi_minus;
    const ComplexMat2 eta_outer =
        metric_from_eigvecs(spec.u_plus, spec.u_minus, phi_plus, phi_minus);
    metric.update(linalg::max_abs(spec.eta_plus), linalg::max_abs(eta_outer),
                  linalg::max_abs_diff(spec.eta_plus, eta_outer));

    const auto [ep, em] = eigen_by_charpoly(H);
    eigenvalues.update(
        std::max(std::abs(spec.E_plus), std::abs(spec.E_minus)),
        std::max(std::abs(ep), std::abs(em)),
        std::max(std::abs(ep - spec.E_plus), std::abs(em - spec.E_minus)));

    // Central differences need the series evolution itself accurate to
    // well below step^2, which bounds how far out in t it is sampled.
    const double t_cap =
        std::min(period, 30.0 / std::max(1.0, linalg::max_abs(H)));
    const double t_rate = uniform_unit(rng) * t_cap;
    const OracleReport r =
        numeric_time_derivative_check(H, spec.eta_plus, state, t_rate);
    rate.update(r.primary, r.oracle, r.difference);
  }

  std::vector<OracleReport> reports;
  reports.push_back(make_report(
      "evolution-series-vs-spectral", evolution.primary, evolution.oracle,
      evolution.difference, tolerance_override.value_or(1e-10)));
  reports.push_back(make_report("metric-outer-vs-closed", metric.primary,
                                metric.oracle, metric.difference,
                                tolerance_override.value_or(1e-12)));
  reports.push_back(make_report(
      "eigenvalues-charpoly-vs-closed", eigenvalues.primary,
      eigenvalues.oracle, eigenvalues.difference,
      tolerance_override.value_or(1e-12)));
  reports.push_back(make_report("metric-norm-rate", rate.primary, rate.oracle,
                                rate.difference,
                                tolerance_override.value_or(1e-8)));
  return reports;
}

}  // namespace ptqs::oracle
