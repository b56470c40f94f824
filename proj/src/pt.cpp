#include "ptqs/pt.hpp"

#include <cmath>
#include <sstream>

namespace ptqs::pt {

namespace {

constexpr double kPi = 3.14159265358979323846;

ComplexMat2 metric_from_alpha(double alpha) {
  const double sec = 1.0 / std::cos(alpha);
  const double tan = std::tan(alpha);
  return {sec, Complex(0.0, -tan), Complex(0.0, tan), sec};
}

ComplexMat2 c_from_alpha(double alpha) {
  const double sec = 1.0 / std::cos(alpha);
  const double tan = std::tan(alpha);
  return {Complex(0.0, tan), sec, sec, Complex(0.0, -tan)};
}

ComplexMat2 g_from_alpha(double alpha) {
  const double n = 1.0 / std::sqrt(std::cos(alpha));
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  return {n * c, Complex(0.0, -n * s), Complex(0.0, n * s), n * c};
}

}  // namespace

ComplexMat2 parity() { return {0.0, 1.0, 1.0, 0.0}; }

PTParams::PTParams(double rho_, double sigma_, double varphi_,
                   double phi_offdiag_)
    : rho(rho_), sigma(sigma_), varphi(varphi_), phi_offdiag(phi_offdiag_) {
  if (!std::isfinite(rho) || !std::isfinite(sigma) || !std::isfinite(varphi) ||
      !std::isfinite(phi_offdiag))
    throw std::invalid_argument("PTParams: non-finite parameter");
}

const char* to_string(PTPhase::Tag tag) {
  switch (tag) {
    case PTPhase::Tag::Unbroken: return "unbroken";
    case PTPhase::Tag::Exceptional: return "exceptional";
    case PTPhase::Tag::Broken: return "broken";
  }
  return "?";
}

ComplexMat2 build_general_hamiltonian(const PTParams& p) {
  const Complex ed = std::polar(p.rho, p.varphi);
  const Complex eo = std::polar(p.sigma, p.phi_offdiag);
  return {ed, eo, std::conj(eo), std::conj(ed)};
}

ComplexMat2 build_symmetric_hamiltonian(const PTParams& p) {
  const double cycles = p.phi_offdiag / kPi;
  if (std::abs(cycles - std::round(cycles)) > 1e-12)
    throw NotSymmetric(
        "build_symmetric_hamiltonian: off-diagonal phase must be an integer "
        "multiple of pi");
  // e^{i n pi} = +-1 exactly
  const double sign = (static_cast<long long>(std::llround(cycles)) % 2 == 0)
                          ? 1.0
                          : -1.0;
  const Complex ed = std::polar(p.rho, p.varphi);
  return {ed, sign * p.sigma, sign * p.sigma, std::conj(ed)};
}

PTPhase classify_phase(const PTParams& p) {
  const double s2 = p.sigma * p.sigma;
  const double r2sin2 = p.rho * p.rho * std::sin(p.varphi) * std::sin(p.varphi);
  const double disc = s2 - r2sin2;
  // Diagonal Hermitian corner: no coupling and no diagonal phase.
  if (p.sigma == 0.0 && std::sin(p.varphi) == 0.0)
    return {PTPhase::Tag::Unbroken, disc};
  const double tol = 1e-10 * std::max(s2, p.rho * p.rho);
  if (disc > tol) return {PTPhase::Tag::Unbroken, disc};
  if (disc < -tol) return {PTPhase::Tag::Broken, disc};
  return {PTPhase::Tag::Exceptional, disc};
}

SpectralData spectral_decompose(const ComplexMat2& H, const PTParams& p) {
  // Parameters, not matrix entries, drive the decomposition; reject an H
  // that does not actually belong to them.
  if (linalg::max_abs_diff(H, build_general_hamiltonian(p)) >
      1e-9 * std::max(1.0, linalg::max_abs(H)))
    throw std::invalid_argument(
        "spectral_decompose: matrix does not match the given parameters");

  const PTPhase phase = classify_phase(p);
  if (phase.tag == PTPhase::Tag::Broken) {
    const double re = p.rho * std::cos(p.varphi);
    const double im = std::sqrt(-phase.discriminant);
    std::ostringstream msg;
    msg << "spectral_decompose: broken phase, eigenvalues form the complex "
           "pair "
        << re << " +- " << im << "i";
    throw BrokenPhase(msg.str(), Complex(re, im), Complex(re, -im));
  }
  if (phase.tag == PTPhase::Tag::Exceptional)
    throw ExceptionalPoint(
        "spectral_decompose: parameters sit at the exceptional point; the "
        "eigensystem is incomplete");

  SpectralData out;
  const double sin_alpha =
      (p.sigma == 0.0) ? 0.0 : p.rho * std::sin(p.varphi) / p.sigma;
  out.alpha = std::asin(sin_alpha);
  const double root = std::sqrt(phase.discriminant);
  const double mid = p.rho * std::cos(p.varphi);
  out.E_plus = mid + root;
  out.E_minus = mid - root;
  out.beta = 2.0 * root;

  const double n = 1.0 / std::sqrt(2.0 * std::cos(out.alpha));
  const Complex eplus = std::polar(n, out.alpha / 2.0);
  const Complex eminus = std::polar(n, -out.alpha / 2.0);
  out.u_plus = {eplus, eminus};
  out.u_minus = {eminus, -eplus};

  // A_inv has the eigenvectors as columns; in this phase convention the
  // matrix is involutory, so A is the same matrix.
  out.A_inv = {eplus, eminus, eminus, -eplus};
  out.A = out.A_inv;

  out.eta_plus = metric_from_alpha(out.alpha);
  out.C = c_from_alpha(out.alpha);
  out.G = g_from_alpha(out.alpha);
  out.H_prime = {mid, root, root, mid};
  const double invsqrt2 = 1.0 / std::sqrt(2.0);
  out.V = {invsqrt2, invsqrt2, invsqrt2, -invsqrt2};
  return out;
}

ComplexMat2 build_metric(const SpectralData& spec) {
  return metric_from_alpha(spec.alpha);
}

ComplexMat2 build_c_operator(const SpectralData& spec) {
  return c_from_alpha(spec.alpha);
}

HermitianEquivalent build_hermitian_equivalent(const SpectralData& spec) {
  const double invsqrt2 = 1.0 / std::sqrt(2.0);
  return {spec.G, spec.H_prime, spec.V,
          ComplexVec2{invsqrt2, invsqrt2},
          ComplexVec2{invsqrt2, -invsqrt2}};
}

}  // namespace ptqs::pt
