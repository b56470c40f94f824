// inner.hpp - one generic inner-product engine. Every product used in the
// formalism is a (matrix, antilinear-flag) pair applied as
// <psi|phi> = (M |psi or conj(psi)>)^T . |phi>, so Gram tables, equivalence
// checks, and positivity sweeps all run through the same two functions.
#pragma once

#include "ptqs/linalg.hpp"
#include "ptqs/pt.hpp"

namespace ptqs::inner {

using linalg::Complex;
using linalg::ComplexMat2;
using linalg::ComplexVec2;

struct InnerProductSpec {
  ComplexMat2 linear_part;
  bool antilinear = false;  // conjugate the first argument before applying
};

// The named products of the formalism. Orthogonal is the plain bilinear
// dot; T conjugates (the Euclidean product); P and PT insert the parity
// matrix; CPT uses C.P and is positive definite in the unbroken phase;
// EtaPlus evaluates psi^dagger eta_plus phi.
enum class NamedProduct { Orthogonal, T, P, PT, CPT, EtaPlus };

const char* to_string(NamedProduct p);

// True for the products that define a positive-definite norm on the whole
// space in the unbroken phase.
bool is_positive_definite(NamedProduct p);

Complex inner(const InnerProductSpec& spec, const ComplexVec2& psi,
              const ComplexVec2& phi);

// 2x2 matrix of pairwise products of (b0, b1).
ComplexMat2 gram(const InnerProductSpec& spec, const ComplexVec2& b0,
                 const ComplexVec2& b1);

InnerProductSpec resolve(NamedProduct name, const pt::SpectralData& spec);

}  // namespace ptqs::inner
