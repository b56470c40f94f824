#include "ptqs/transitions.hpp"

#include <cmath>

namespace ptqs::transitions {

namespace {

// psi^dagger eta_plus phi: the positive-definite conserved product used for
// all probability normalizations.
Complex metric_inner(const SpectralData& spec, const ComplexVec2& psi,
                     const ComplexVec2& phi) {
  return linalg::hermitian_dot(psi, spec.eta_plus * phi);
}

double real_norm(const SpectralData& spec, const ComplexVec2& v) {
  const Complex n = metric_inner(spec, v, v);
  if (std::abs(n.imag()) > 1e-9 * std::max(1.0, std::abs(n.real())))
    throw std::logic_error("norm acquired a non-real value");
  return n.real();
}

TransitionResult make_result(const SpectralData& spec, const ComplexVec2& fin,
                             const ComplexVec2& evolved) {
  TransitionResult r;
  r.amplitude = metric_inner(spec, fin, evolved);
  r.normalization = real_norm(spec, fin) * real_norm(spec, evolved);
  r.probability = std::norm(r.amplitude) / r.normalization;
  return r;
}

}  // namespace

ComplexVec2 flavor_vector(Flavor f) {
  return f == Flavor::A ? ComplexVec2{1.0, 0.0} : ComplexVec2{0.0, 1.0};
}

ComplexVec2 cpt_apply(const SpectralData& spec, const ComplexVec2& v) {
  return spec.C * (pt::parity() * linalg::conj(v));
}

ComplexVec2 evolve_vector(const SpectralData& spec, const ComplexVec2& v,
                          double t) {
  // The energy eigenstates are orthonormal under the metric product, so the
  // expansion coefficients are plain metric projections.
  const Complex cp = metric_inner(spec, spec.u_plus, v);
  const Complex cm = metric_inner(spec, spec.u_minus, v);
  const Complex pp = std::polar(1.0, -spec.E_plus * t);
  const Complex pm = std::polar(1.0, -spec.E_minus * t);
  return (cp * pp) * spec.u_plus + (cm * pm) * spec.u_minus;
}

EvolvedState evolve_flavor(const SpectralData& spec, Flavor origin, double t) {
  // Basis-change rows give the exact expansion of the flavor states.
  const Complex c0 = origin == Flavor::A ? spec.A_inv.e00 : spec.A_inv.e10;
  const Complex c1 = origin == Flavor::A ? spec.A_inv.e01 : spec.A_inv.e11;
  const Complex pp = std::polar(1.0, -spec.E_plus * t);
  const Complex pm = std::polar(1.0, -spec.E_minus * t);
  return {(c0 * pp) * spec.u_plus + (c1 * pm) * spec.u_minus, t,
          origin == Flavor::A ? Origin::A : Origin::B};
}

TransitionResult amplitude_raw(const SpectralData& spec,
                               inner::NamedProduct product, Flavor from,
                               Flavor to, double t) {
  if (product != inner::NamedProduct::CPT &&
      product != inner::NamedProduct::EtaPlus)
    throw NonPositiveProduct(
        "amplitude_raw: probabilities need a conserved positive-definite "
        "product (CPT or eta-plus)");
  // Both admitted products evaluate to psi^dagger eta_plus phi.
  return make_result(spec, flavor_vector(to),
                     evolve_flavor(spec, from, t).vector);
}

ComplexVec2 cpt_eigenstate(const SpectralData& spec, Flavor origin) {
  const ComplexVec2 u = flavor_vector(origin);
  return Complex(0.5) * (u + cpt_apply(spec, u));
}

TransitionResult probability_cpt(const SpectralData& spec, Flavor from,
                                 Flavor to, double t) {
  return make_result(spec, cpt_eigenstate(spec, to),
                     evolve_flavor(spec, from, t).vector);
}

ComplexVec2 antiflavor_state(const SpectralData& spec, Flavor f) {
  return spec.C * flavor_vector(f);
}

ComplexVec2 cpt_eigenstate_antiflavor(const SpectralData& spec, Flavor f) {
  const ComplexVec2 u = antiflavor_state(spec, f);
  return Complex(0.5) * (u + cpt_apply(spec, u));
}

TransitionResult probability_cpt_antiflavor(const SpectralData& spec,
                                            Flavor from, Flavor to, double t) {
  return make_result(spec, cpt_eigenstate_antiflavor(spec, to),
                     evolve_vector(spec, antiflavor_state(spec, from), t));
}

ConservationReport conservation_report(const SpectralData& spec, double t) {
  const double paa = probability_cpt(spec, Flavor::A, Flavor::A, t).probability;
  const double pab = probability_cpt(spec, Flavor::A, Flavor::B, t).probability;
  const double pba = probability_cpt(spec, Flavor::B, Flavor::A, t).probability;
  const double pbb = probability_cpt(spec, Flavor::B, Flavor::B, t).probability;
  return {paa + pab, pba + pbb, paa + pba, pab + pbb, t};
}

AsymmetryReport asymmetries(const SpectralData& spec, double t) {
  const double pab = probability_cpt(spec, Flavor::A, Flavor::B, t).probability;
  const double pba = probability_cpt(spec, Flavor::B, Flavor::A, t).probability;
  const double pba_bar =
      probability_cpt_antiflavor(spec, Flavor::B, Flavor::A, t).probability;
  return {pab - pba, pab - pba_bar, t};
}

TransitionResult hermitian_picture_probability(const SpectralData& spec,
                                               Flavor from, Flavor to,
                                               double t) {
  const ComplexVec2 from_p = spec.G * flavor_vector(from);
  const ComplexVec2 to_p = spec.G * flavor_vector(to);
  // H' is Hermitian with orthonormal eigenvectors (1, +-1)/sqrt(2), so the
  // evolved state is an ordinary Euclidean spectral sum.
  const double invsqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexVec2 vp{invsqrt2, invsqrt2};
  const ComplexVec2 vm{invsqrt2, -invsqrt2};
  const Complex cp = linalg::hermitian_dot(vp, from_p);
  const Complex cm = linalg::hermitian_dot(vm, from_p);
  const ComplexVec2 evolved =
      (cp * std::polar(1.0, -spec.E_plus * t)) * vp +
      (cm * std::polar(1.0, -spec.E_minus * t)) * vm;

  TransitionResult r;
  r.amplitude = linalg::hermitian_dot(to_p, evolved);
  r.normalization = linalg::hermitian_dot(to_p, to_p).real() *
                    linalg::hermitian_dot(evolved, evolved).real();
  r.probability = std::norm(r.amplitude) / r.normalization;
  return r;
}

double tilde_initial_sum_check(const SpectralData& spec, double t) {
  const ComplexVec2 prepared = cpt_eigenstate(spec, Flavor::A);
  const ComplexVec2 evolved = evolve_vector(spec, prepared, t);
  const double n_evolved = real_norm(spec, evolved);
  double sum = 0.0;
  for (Flavor to : {Flavor::A, Flavor::B}) {
    const ComplexVec2 fin = flavor_vector(to);
    sum += std::norm(metric_inner(spec, fin, evolved)) /
           (real_norm(spec, fin) * n_evolved);
  }
  return sum;
}

}  // namespace ptqs::transitions
