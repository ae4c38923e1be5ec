#pragma once

// Fixed-size dense matrices for the two-qubit oracle path. Everything here is
// extended precision (long double): the oracle takes square roots of density
// matrix eigenvalues, and those are only as good as the absolute error of the
// smallest eigenvalue.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

namespace spincorr {

using real_x = long double;
using cplx_x = std::complex<real_x>;

template <std::size_t N>
struct CMatrix {
  std::array<cplx_x, N * N> m{};

  static constexpr std::size_t size() { return N; }

  cplx_x& operator()(std::size_t i, std::size_t j) { return m[i * N + j]; }
  const cplx_x& operator()(std::size_t i, std::size_t j) const { return m[i * N + j]; }

  static CMatrix identity() {
    CMatrix r;
    for (std::size_t i = 0; i < N; ++i) r(i, i) = 1;
    return r;
  }

  CMatrix adjoint() const {
    CMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx_x trace() const {
    cplx_x t = 0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx_x aik = a(i, k);
        if (aik == cplx_x{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.m[i] += b.m[i];
    return a;
  }

  friend CMatrix operator-(CMatrix a, const CMatrix& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.m[i] -= b.m[i];
    return a;
  }

  friend CMatrix operator*(cplx_x s, CMatrix a) {
    for (auto& x : a.m) x *= s;
    return a;
  }

  /// Largest entry-wise modulus.
  real_x max_abs() const {
    real_x r = 0;
    for (const auto& x : m) r = std::max(r, std::abs(x));
    return r;
  }
};

using CMatrix2 = CMatrix<2>;
using CMatrix4 = CMatrix<4>;

/// Real symmetric 3x3 (row-major).
struct RMatrix3 {
  std::array<real_x, 9> m{};
  real_x& operator()(std::size_t i, std::size_t j) { return m[i * 3 + j]; }
  real_x operator()(std::size_t i, std::size_t j) const { return m[i * 3 + j]; }
};

CMatrix4 kron(const CMatrix2& a, const CMatrix2& b);

namespace pauli {
CMatrix2 identity();
CMatrix2 x();
CMatrix2 y();
CMatrix2 z();
}  // namespace pauli

/// Eigen-decomposition of a Hermitian matrix: values descending, eigenvectors
/// stored as the columns of `vectors`.
struct HermitianEigen4 {
  std::array<real_x, 4> values{};
  CMatrix4 vectors;
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Assumes (does not check) Hermiticity; only the upper
/// triangle drives the rotations.
HermitianEigen4 hermitian_eigen(const CMatrix4& a);

/// Eigenvalues of a real symmetric 3x3, descending (cyclic Jacobi).
std::array<real_x, 3> symmetric_eigenvalues(const RMatrix3& a);

/// Eigenvalues and eigenvectors (columns) of a real symmetric 3x3.
std::array<real_x, 3> symmetric_eigen(const RMatrix3& a, RMatrix3* vectors);

}  // namespace spincorr
