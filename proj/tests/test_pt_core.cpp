// Tests for Hamiltonian construction, phase classification, and the derived
// operator suite: frozen reference values at one parameter point plus
// property tests of the operator identities over random unbroken draws.
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "ptqs/errors.hpp"
#include "ptqs/oracle.hpp"
#include "ptqs/pt.hpp"

using namespace ptqs;
using namespace ptqs::pt;
using linalg::Complex;
using linalg::ComplexMat2;
using linalg::ComplexVec2;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Reference point (rho, sigma, varphi) = (1, 2, pi/6), values frozen from an
// independent high-precision evaluation of the closed forms.
constexpr double kAlphaRef = 0.25268025514207865;
constexpr double kBetaRef = 3.872983346207417;
constexpr double kSecRef = 1.0327955589886444;
constexpr double kTanRef = 0.2581988897471611;
constexpr double kEPlusRef = 2.8025170768881473;
constexpr double kEMinusRef = -1.07046626931927;
constexpr double kRootRef = 1.9364916731037085;  // (E+ - E-)/2

PTParams ref_params() { return PTParams(1.0, 2.0, kPi / 6.0); }

SpectralData ref_spec() {
  const PTParams p = ref_params();
  return spectral_decompose(build_symmetric_hamiltonian(p), p);
}

}  // namespace

TEST_CASE("parity operator swaps the flavor components") {
  const ComplexMat2 p = parity();
  CHECK(p.e00 == Complex(0.0, 0.0));
  CHECK(p.e01 == Complex(1.0, 0.0));
  CHECK(p.e10 == Complex(1.0, 0.0));
  CHECK(p.e11 == Complex(0.0, 0.0));
  CHECK(linalg::max_abs_diff(p * p, linalg::identity()) == 0.0);
}

TEST_CASE("PTParams rejects non-finite parameters") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PTParams(nan, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PTParams(1.0, 1.0, nan), std::invalid_argument);
  CHECK_NOTHROW(PTParams(1.0, 2.0, 3.0, kPi));
}

TEST_CASE("general Hamiltonian has the phase-conjugate structure") {
  const PTParams p(1.5, 0.7, 0.4, 0.9);
  const ComplexMat2 h = build_general_hamiltonian(p);
  CHECK(std::abs(h.e00 - std::polar(1.5, 0.4)) == 0.0);
  CHECK(std::abs(h.e01 - std::polar(0.7, 0.9)) == 0.0);
  CHECK(std::abs(h.e10 - std::conj(h.e01)) == 0.0);
  CHECK(std::abs(h.e11 - std::conj(h.e00)) == 0.0);
  CHECK(std::abs(linalg::det(h) - Complex(1.5 * 1.5 - 0.7 * 0.7, 0.0)) <=
        1e-15);
}

TEST_CASE("symmetric Hamiltonian accepts only integer multiples of pi") {
  // phi_offdiag = 0: plain real off-diagonal
  const ComplexMat2 h0 = build_symmetric_hamiltonian(PTParams(1.0, 2.0, 0.3));
  CHECK(h0.e01 == Complex(2.0, 0.0));
  CHECK(h0.e10 == Complex(2.0, 0.0));
  CHECK(std::abs(h0.e00 - std::polar(1.0, 0.3)) == 0.0);

  // phi_offdiag = pi flips the sign exactly (no residual imaginary part)
  const ComplexMat2 hpi =
      build_symmetric_hamiltonian(PTParams(1.0, 2.0, 0.3, kPi));
  CHECK(hpi.e01 == Complex(-2.0, 0.0));
  CHECK(hpi.e10 == Complex(-2.0, 0.0));

  const ComplexMat2 h2pi =
      build_symmetric_hamiltonian(PTParams(1.0, 2.0, 0.3, 2.0 * kPi));
  CHECK(h2pi.e01 == Complex(2.0, 0.0));

  const ComplexMat2 hmpi =
      build_symmetric_hamiltonian(PTParams(1.0, 2.0, 0.3, -kPi));
  CHECK(hmpi.e01 == Complex(-2.0, 0.0));

  CHECK_THROWS_AS(build_symmetric_hamiltonian(PTParams(1.0, 2.0, 0.3, 0.5)),
                  NotSymmetric);
}

TEST_CASE("phase classification covers all three regions") {
  const PTPhase unb = classify_phase(PTParams(1.0, 2.0, kPi / 6.0));
  CHECK(unb.tag == PTPhase::Tag::Unbroken);
  CHECK(unb.discriminant == doctest::Approx(3.75));

  const PTPhase bro = classify_phase(PTParams(1.0, 0.5, kPi / 2.0));
  CHECK(bro.tag == PTPhase::Tag::Broken);
  CHECK(bro.discriminant == doctest::Approx(-0.75));

  // rho sin(varphi) = sigma exactly
  const PTPhase exc = classify_phase(PTParams(2.0, 1.0, kPi / 6.0));
  CHECK(exc.tag == PTPhase::Tag::Exceptional);

  // within the scale-relative tolerance band around zero
  const PTPhase near = classify_phase(PTParams(1.0, 1.0 + 1e-12, kPi / 2.0));
  CHECK(near.tag == PTPhase::Tag::Exceptional);

  // diagonal Hermitian corner: sigma = 0, sin(varphi) = 0 is unbroken
  const PTPhase diag = classify_phase(PTParams(3.0, 0.0, 0.0));
  CHECK(diag.tag == PTPhase::Tag::Unbroken);
  CHECK(diag.discriminant == 0.0);

  CHECK(std::string(to_string(PTPhase::Tag::Unbroken)) == "unbroken");
  CHECK(std::string(to_string(PTPhase::Tag::Exceptional)) == "exceptional");
  CHECK(std::string(to_string(PTPhase::Tag::Broken)) == "broken");
}

TEST_CASE("spectral_decompose reproduces the frozen reference values") {
  const SpectralData s = ref_spec();

  CHECK(std::abs(s.alpha - kAlphaRef) <= 1e-15);
  CHECK(std::abs(s.E_plus - kEPlusRef) <= 1e-14);
  CHECK(std::abs(s.E_minus - kEMinusRef) <= 1e-14);
  CHECK(std::abs(s.beta - kBetaRef) <= 1e-14);
  CHECK(std::abs(s.beta - (s.E_plus - s.E_minus)) <= 1e-15);

  // eigenvector phase convention: (e^{+-i a/2}, +-e^{-+i a/2})/sqrt(2 cos a)
  const double n = 1.0 / std::sqrt(2.0 * std::cos(kAlphaRef));
  CHECK(std::abs(s.u_plus.c0 - std::polar(n, kAlphaRef / 2.0)) <= 1e-15);
  CHECK(std::abs(s.u_plus.c1 - std::polar(n, -kAlphaRef / 2.0)) <= 1e-15);
  CHECK(std::abs(s.u_minus.c0 - std::polar(n, -kAlphaRef / 2.0)) <= 1e-15);
  CHECK(std::abs(s.u_minus.c1 + std::polar(n, kAlphaRef / 2.0)) <= 1e-15);

  // metric and symmetry operator entries
  CHECK(std::abs(s.eta_plus.e00 - Complex(kSecRef, 0.0)) <= 1e-15);
  CHECK(std::abs(s.eta_plus.e01 - Complex(0.0, -kTanRef)) <= 1e-15);
  CHECK(std::abs(s.eta_plus.e10 - Complex(0.0, kTanRef)) <= 1e-15);
  CHECK(std::abs(s.eta_plus.e11 - Complex(kSecRef, 0.0)) <= 1e-15);
  CHECK(std::abs(s.C.e00 - Complex(0.0, kTanRef)) <= 1e-15);
  CHECK(std::abs(s.C.e01 - Complex(kSecRef, 0.0)) <= 1e-15);

  // Hermitian picture: H' = [[mid, root], [root, mid]]
  const double mid = std::cos(kPi / 6.0);
  CHECK(std::abs(s.H_prime.e00 - Complex(mid, 0.0)) <= 1e-15);
  CHECK(std::abs(s.H_prime.e01 - Complex(kRootRef, 0.0)) <= 1e-14);

  // determinants fixed by the convention
  CHECK(std::abs(linalg::det(s.eta_plus) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(linalg::det(s.C) + Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(linalg::det(s.A) + Complex(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("decomposition rejects a matrix that disagrees with the params") {
  const PTParams p = ref_params();
  const ComplexMat2 wrong =
      build_symmetric_hamiltonian(PTParams(1.1, 2.0, kPi / 6.0));
  CHECK_THROWS_AS(spectral_decompose(wrong, p), std::invalid_argument);
}

TEST_CASE("broken phase throws with the complex eigenvalue pair attached") {
  const PTParams p(1.0, 0.5, kPi / 2.0);
  const ComplexMat2 h = build_symmetric_hamiltonian(p);
  const double im = std::sqrt(0.75);
  try {
    spectral_decompose(h, p);
    FAIL("expected BrokenPhase");
  } catch (const BrokenPhase& e) {
    CHECK(std::abs(e.e_plus.real()) <= 1e-15);
    CHECK(std::abs(e.e_plus.imag() - im) <= 1e-15);
    CHECK(std::abs(e.e_minus.imag() + im) <= 1e-15);
    CHECK(std::string(e.what()).find("broken phase") != std::string::npos);
  }
}

TEST_CASE("exceptional point throws from the decomposition") {
  const PTParams p(1.0, 1.0, kPi / 2.0);  // sin(pi/2) = 1 exactly
  const ComplexMat2 h = build_symmetric_hamiltonian(p);
  CHECK_THROWS_AS(spectral_decompose(h, p), ExceptionalPoint);
}

TEST_CASE("Hermitian limit: alpha = 0 and Euclidean structures") {
  const PTParams p(1.2, 0.8, 0.0);
  const SpectralData s = spectral_decompose(build_symmetric_hamiltonian(p), p);
  CHECK(s.alpha == 0.0);
  CHECK(linalg::max_abs_diff(s.eta_plus, linalg::identity()) == 0.0);
  CHECK(s.E_plus == doctest::Approx(2.0));
  CHECK(s.E_minus == doctest::Approx(0.4));
  // C degenerates to the parity matrix
  CHECK(linalg::max_abs_diff(s.C, parity()) == 0.0);
}

TEST_CASE("diagonal Hermitian corner decomposes without division by zero") {
  const PTParams p(3.0, 0.0, 0.0);
  const SpectralData s = spectral_decompose(build_general_hamiltonian(p), p);
  CHECK(s.alpha == 0.0);
  CHECK(s.E_plus == doctest::Approx(3.0));
  CHECK(s.E_minus == doctest::Approx(3.0));
  CHECK(linalg::max_abs_diff(s.eta_plus, linalg::identity()) == 0.0);
}

TEST_CASE("builder helpers agree with the decomposition fields") {
  const SpectralData s = ref_spec();
  CHECK(linalg::max_abs_diff(build_metric(s), s.eta_plus) == 0.0);
  CHECK(linalg::max_abs_diff(build_c_operator(s), s.C) == 0.0);
  const HermitianEquivalent he = build_hermitian_equivalent(s);
  CHECK(linalg::max_abs_diff(he.G, s.G) == 0.0);
  CHECK(linalg::max_abs_diff(he.H_prime, s.H_prime) == 0.0);
  CHECK(linalg::max_abs_diff(he.V, s.V) == 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(linalg::max_abs_diff(he.u_prime_plus, ComplexVec2{r, r}) == 0.0);
  CHECK(linalg::max_abs_diff(he.u_prime_minus, ComplexVec2{r, -r}) == 0.0);
}

TEST_CASE("operator identities hold over random unbroken draws") {
  std::mt19937_64 rng(12345);
  const double tol = 1e-12;
  for (int i = 0; i < 200; ++i) {
    const PTParams p = oracle::draw_unbroken(rng);
    const ComplexMat2 h = build_symmetric_hamiltonian(p);
    const SpectralData s = spectral_decompose(h, p);
    const ComplexMat2 hd = linalg::adjoint(h);
    const ComplexMat2 id = linalg::identity();

    // pseudo-Hermiticity under both parity and the metric
    CHECK(linalg::max_abs_diff(parity() * h * parity(), hd) <= tol);
    CHECK(linalg::max_abs_diff(s.eta_plus * h * linalg::inverse(s.eta_plus),
                               hd) <= tol);

    // symmetry operator: commutes with H, squares to one
    CHECK(linalg::max_abs_diff(s.C * h, h * s.C) <= tol);
    CHECK(linalg::max_abs_diff(s.C * s.C, id) <= tol);
    CHECK(linalg::max_abs_diff(s.C, linalg::inverse(s.eta_plus) * parity()) <=
          tol);

    // eigen equations and the similarity transform
    CHECK(linalg::max_abs_diff(h * s.u_plus, Complex(s.E_plus) * s.u_plus) <=
          tol);
    CHECK(linalg::max_abs_diff(h * s.u_minus,
                               Complex(s.E_minus) * s.u_minus) <= tol);
    const ComplexMat2 diag = s.A * h * s.A_inv;
    CHECK(std::abs(diag.e00 - Complex(s.E_plus)) <= tol);
    CHECK(std::abs(diag.e11 - Complex(s.E_minus)) <= tol);
    CHECK(std::abs(diag.e01) <= tol);
    CHECK(std::abs(diag.e10) <= tol);

    // involutory basis change
    CHECK(linalg::max_abs_diff(s.A, s.A_inv) == 0.0);
    CHECK(linalg::max_abs_diff(s.A * s.A, id) <= tol);

    // Hermitian-picture factorization
    CHECK(linalg::max_abs_diff(s.G * s.G, s.eta_plus) <= tol);
    CHECK(linalg::max_abs_diff(s.A, s.V * s.G) <= tol);
    CHECK(linalg::max_abs_diff(s.G * h * linalg::inverse(s.G), s.H_prime) <=
          tol);
    CHECK(linalg::max_abs_diff(s.H_prime, linalg::adjoint(s.H_prime)) <= tol);

    // metric self-identity: 1 + eta^2 = 2 sec(alpha) eta
    const double sec = 1.0 / std::cos(s.alpha);
    CHECK(linalg::max_abs_diff(id + s.eta_plus * s.eta_plus,
                               Complex(2.0 * sec) * s.eta_plus) <= tol);

    // eigenvalue ordering and splitting
    CHECK(s.E_plus >= s.E_minus);
    CHECK(std::abs(s.beta - (s.E_plus - s.E_minus)) <= tol);
  }
}
