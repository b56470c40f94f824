// transitions.hpp - time evolution and transition probabilities in every
// variant the formalism distinguishes: raw flavor-to-flavor (which fails to
// conserve probability), symmetrized final states (which conserve it), the
// Hermitian-equivalent picture, antiflavor transitions, and the T/CPT
// asymmetries built from them.
#pragma once

#include "ptqs/inner.hpp"
#include "ptqs/linalg.hpp"
#include "ptqs/pt.hpp"

namespace ptqs::transitions {

using linalg::Complex;
using linalg::ComplexVec2;
using pt::SpectralData;

enum class Flavor { A, B };

// Label for where an evolved vector started.
enum class Origin {
  A, B,                  // raw flavor states
  TildeA, TildeB,        // symmetrized (CPT-eigenstate) flavor states
  Plus, Minus,           // energy eigenstates
  ABar, BBar,            // antiflavor states C|u>
  TildeABar, TildeBBar,  // symmetrized antiflavor states
};

struct EvolvedState {
  ComplexVec2 vector;
  double time = 0.0;  // negative values allowed (time-reversal checks)
  Origin origin = Origin::A;
};

// amplitude and |amplitude|^2 / normalization; the normalization (product of
// the two state norms under the chosen inner product) is always reported
// rather than silently applied, so the non-conserving variants stay
// inspectable.
struct TransitionResult {
  Complex amplitude;
  double probability = 0.0;
  double normalization = 1.0;
};

// The four sums of the conserved-probability matrix at one time.
struct ConservationReport {
  double row_a = 0.0;  // P(a->a) + P(a->b)
  double row_b = 0.0;  // P(b->a) + P(b->b)
  double col_a = 0.0;  // P(a->a) + P(b->a)
  double col_b = 0.0;  // P(a->b) + P(b->b)
  double time = 0.0;
};

struct AsymmetryReport {
  double delta_T = 0.0;    // P(a->b) - P(b->a)
  double delta_CPT = 0.0;  // P(a->b) - P(bbar->abar)
  double time = 0.0;
};

// (1,0) or (0,1).
ComplexVec2 flavor_vector(Flavor f);

// The combined symmetry operation: C . P . conj(v). Antilinear.
ComplexVec2 cpt_apply(const SpectralData& spec, const ComplexVec2& v);

// Spectral-sum evolution of an arbitrary vector under the decomposed
// Hamiltonian (coefficients extracted with the metric inner product).
ComplexVec2 evolve_vector(const SpectralData& spec, const ComplexVec2& v,
                          double t);

// Exact spectral-sum evolution of a flavor basis state.
EvolvedState evolve_flavor(const SpectralData& spec, Flavor origin, double t);

// Transition amplitude/probability with RAW flavor final states under a
// positive-definite conserved product (CPT or EtaPlus only; anything else
// throws NonPositiveProduct). These probabilities do not sum to one.
TransitionResult amplitude_raw(const SpectralData& spec,
                               inner::NamedProduct product, Flavor from,
                               Flavor to, double t);

// Symmetrized flavor state (|u> + CPT|u>)/2; a fixed point of cpt_apply.
ComplexVec2 cpt_eigenstate(const SpectralData& spec, Flavor origin);

// Conserved transition probability: symmetrized final state, raw initial
// state, CPT product. Rows of the resulting matrix sum to one.
TransitionResult probability_cpt(const SpectralData& spec, Flavor from,
                                 Flavor to, double t);

// Antiflavor states C|u_f| and their symmetrized finals, with the mirrored
// probability definition.
ComplexVec2 antiflavor_state(const SpectralData& spec, Flavor f);
ComplexVec2 cpt_eigenstate_antiflavor(const SpectralData& spec, Flavor f);
TransitionResult probability_cpt_antiflavor(const SpectralData& spec,
                                            Flavor from, Flavor to, double t);

ConservationReport conservation_report(const SpectralData& spec, double t);

AsymmetryReport asymmetries(const SpectralData& spec, double t);

// Same physics computed in the similarity-transformed picture: states G|u>,
// evolution under the Hermitian H', Euclidean product throughout. Equals
// amplitude_raw with the EtaPlus product.
TransitionResult hermitian_picture_probability(const SpectralData& spec,
                                               Flavor from, Flavor to,
                                               double t);

// Probability for a state prepared in the symmetrized a state to be found
// in either RAW flavor state at time t (each term normalized like
// probability_cpt). Closed form 1 - sin(alpha) sin(beta t): time-dependent
// whenever alpha != 0, which is the advertised negative result for
// symmetrized initial states.
double tilde_initial_sum_check(const SpectralData& spec, double t);

}  // namespace ptqs::transitions
