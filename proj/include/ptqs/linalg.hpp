// linalg.hpp - dense 2x2 complex vectors and matrices, the carriers for
// every operator and state in the library. Header-only; all operations are
// pure functions over immutable values.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ptqs/errors.hpp"

namespace ptqs::linalg {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// ---------- ComplexVec2 ----------

struct ComplexVec2 {
  Complex c0{};
  Complex c1{};

  ComplexVec2() = default;
  ComplexVec2(Complex a, Complex b) : c0(a), c1(b) {
    if (!is_finite(c0) || !is_finite(c1))
      throw std::invalid_argument("ComplexVec2: non-finite component");
  }
};

inline ComplexVec2 operator+(const ComplexVec2& a, const ComplexVec2& b) {
  return {a.c0 + b.c0, a.c1 + b.c1};
}

inline ComplexVec2 operator-(const ComplexVec2& a, const ComplexVec2& b) {
  return {a.c0 - b.c0, a.c1 - b.c1};
}

inline ComplexVec2 operator*(Complex s, const ComplexVec2& v) {
  return {s * v.c0, s * v.c1};
}

inline ComplexVec2 conj(const ComplexVec2& v) {
  return {std::conj(v.c0), std::conj(v.c1)};
}

// Plain bilinear dot, no conjugation: a . b.
inline Complex bilinear_dot(const ComplexVec2& a, const ComplexVec2& b) {
  return a.c0 * b.c0 + a.c1 * b.c1;
}

// Euclidean sesquilinear dot: conj(a) . b.
inline Complex hermitian_dot(const ComplexVec2& a, const ComplexVec2& b) {
  return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

inline double max_abs(const ComplexVec2& v) {
  return std::max(std::abs(v.c0), std::abs(v.c1));
}

inline double max_abs_diff(const ComplexVec2& a, const ComplexVec2& b) {
  return max_abs(a - b);
}

// ---------- ComplexMat2 ----------

struct ComplexMat2 {
  // row-major entries
  Complex e00{}, e01{}, e10{}, e11{};

  ComplexMat2() = default;
  ComplexMat2(Complex a, Complex b, Complex c, Complex d)
      : e00(a), e01(b), e10(c), e11(d) {
    if (!is_finite(e00) || !is_finite(e01) || !is_finite(e10) ||
        !is_finite(e11))
      throw std::invalid_argument("ComplexMat2: non-finite entry");
  }
};

inline ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline ComplexMat2 operator+(const ComplexMat2& a, const ComplexMat2& b) {
  return {a.e00 + b.e00, a.e01 + b.e01, a.e10 + b.e10, a.e11 + b.e11};
}

inline ComplexMat2 operator-(const ComplexMat2& a, const ComplexMat2& b) {
  return {a.e00 - b.e00, a.e01 - b.e01, a.e10 - b.e10, a.e11 - b.e11};
}

inline ComplexMat2 operator*(Complex s, const ComplexMat2& m) {
  return {s * m.e00, s * m.e01, s * m.e10, s * m.e11};
}

inline ComplexMat2 mat_mul(const ComplexMat2& a, const ComplexMat2& b) {
  return {a.e00 * b.e00 + a.e01 * b.e10, a.e00 * b.e01 + a.e01 * b.e11,
          a.e10 * b.e00 + a.e11 * b.e10, a.e10 * b.e01 + a.e11 * b.e11};
}

inline ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) {
  return mat_mul(a, b);
}

inline ComplexVec2 operator*(const ComplexMat2& m, const ComplexVec2& v) {
  return {m.e00 * v.c0 + m.e01 * v.c1, m.e10 * v.c0 + m.e11 * v.c1};
}

inline ComplexMat2 transpose(const ComplexMat2& m) {
  return {m.e00, m.e10, m.e01, m.e11};
}

inline ComplexMat2 conj(const ComplexMat2& m) {
  return {std::conj(m.e00), std::conj(m.e01), std::conj(m.e10),
          std::conj(m.e11)};
}

// Conjugate transpose.
inline ComplexMat2 adjoint(const ComplexMat2& m) {
  return {std::conj(m.e00), std::conj(m.e10), std::conj(m.e01),
          std::conj(m.e11)};
}

inline Complex det(const ComplexMat2& m) {
  return m.e00 * m.e11 - m.e01 * m.e10;
}

inline Complex trace(const ComplexMat2& m) { return m.e00 + m.e11; }

// Outer product a . conj(b)^T, i.e. |a><b| in Euclidean notation.
inline ComplexMat2 outer(const ComplexVec2& a, const ComplexVec2& b) {
  return {a.c0 * std::conj(b.c0), a.c0 * std::conj(b.c1),
          a.c1 * std::conj(b.c0), a.c1 * std::conj(b.c1)};
}

inline double max_abs(const ComplexMat2& m) {
  return std::max(std::max(std::abs(m.e00), std::abs(m.e01)),
                  std::max(std::abs(m.e10), std::abs(m.e11)));
}

inline double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
  return max_abs(a - b);
}

// Adjugate-formula inverse. The singularity cut is scale-relative:
// |det| <= 1e-12 * (max entry magnitude)^2.
inline ComplexMat2 inverse(const ComplexMat2& m) {
  const Complex d = det(m);
  const double scale = max_abs(m);
  if (std::abs(d) <= 1e-12 * scale * scale)
    throw SingularMatrix("inverse: matrix is singular to working precision");
  const Complex inv_d = 1.0 / d;
  return {inv_d * m.e11, -inv_d * m.e01, -inv_d * m.e10, inv_d * m.e00};
}

// exp(scale * m) by scaling-and-squaring on a truncated Taylor series.
// The argument is halved until its row-sum norm is <= 0.5, the series is
// summed to a fixed order, and the result squared back up. Deliberately
// free of any eigendecomposition so it can serve as an independent check
// on spectral evolution paths.
inline ComplexMat2 mat_exp(const ComplexMat2& m, Complex scale) {
  constexpr int kOrder = 16;
  ComplexMat2 x = scale * m;

  const double row0 = std::abs(x.e00) + std::abs(x.e01);
  const double row1 = std::abs(x.e10) + std::abs(x.e11);
  double norm = std::max(row0, row1);
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  x = Complex(std::ldexp(1.0, -squarings)) * x;

  ComplexMat2 sum = identity();
  ComplexMat2 term = identity();
  for (int k = 1; k <= kOrder; ++k) {
    term = Complex(1.0 / k) * (term * x);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace ptqs::linalg
