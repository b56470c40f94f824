#include "ptqs/inner.hpp"

namespace ptqs::inner {

const char* to_string(NamedProduct p) {
  switch (p) {
    case NamedProduct::Orthogonal: return "orthogonal";
    case NamedProduct::T: return "T";
    case NamedProduct::P: return "P";
    case NamedProduct::PT: return "PT";
    case NamedProduct::CPT: return "CPT";
    case NamedProduct::EtaPlus: return "eta-plus";
  }
  return "?";
}

bool is_positive_definite(NamedProduct p) {
  return p == NamedProduct::T || p == NamedProduct::CPT ||
         p == NamedProduct::EtaPlus;
}

Complex inner(const InnerProductSpec& spec, const ComplexVec2& psi,
              const ComplexVec2& phi) {
  const ComplexVec2 arg = spec.antilinear ? linalg::conj(psi) : psi;
  return linalg::bilinear_dot(spec.linear_part * arg, phi);
}

ComplexMat2 gram(const InnerProductSpec& spec, const ComplexVec2& b0,
                 const ComplexVec2& b1) {
  return {inner(spec, b0, b0), inner(spec, b0, b1), inner(spec, b1, b0),
          inner(spec, b1, b1)};
}

InnerProductSpec resolve(NamedProduct name, const pt::SpectralData& spec) {
  switch (name) {
    case NamedProduct::Orthogonal:
      return {linalg::identity(), false};
    case NamedProduct::T:
      return {linalg::identity(), true};
    case NamedProduct::P:
      return {pt::parity(), false};
    case NamedProduct::PT:
      return {pt::parity(), true};
    case NamedProduct::CPT:
      return {spec.C * pt::parity(), true};
    case NamedProduct::EtaPlus:
      // (eta^-1 conj(psi))^T phi = psi^dagger eta phi, since eta^-T = eta.
      return {linalg::inverse(spec.eta_plus), true};
  }
  throw std::invalid_argument("resolve: unknown product");
}

}  // namespace ptqs::inner
