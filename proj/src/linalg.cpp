#include "spincorr/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace spincorr {

CMatrix4 kron(const CMatrix2& a, const CMatrix2& b) {
  CMatrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

namespace pauli {
CMatrix2 identity() { return CMatrix2::identity(); }
CMatrix2 x() {
  CMatrix2 r;
  r(0, 1) = 1;
  r(1, 0) = 1;
  return r;
}
CMatrix2 y() {
  CMatrix2 r;
  r(0, 1) = cplx_x(0, -1);
  r(1, 0) = cplx_x(0, 1);
  return r;
}
CMatrix2 z() {
  CMatrix2 r;
  r(0, 0) = 1;
  r(1, 1) = -1;
  return r;
}
}  // namespace pauli

namespace {

constexpr int kMaxSweeps = 100;

// Smaller root of t^2 + 2 theta t - 1 = 0.
real_x jacobi_tangent(real_x theta) {
  if (std::isinf(theta)) return 0;
  const real_x t = 1 / (std::fabs(theta) + std::sqrt(theta * theta + 1));
  return theta < 0 ? -t : t;
}

}  // namespace

HermitianEigen4 hermitian_eigen(const CMatrix4& input) {
  constexpr std::size_t n = 4;
  CMatrix4 a = input;
  CMatrix4 v = CMatrix4::identity();
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const real_x eps = std::numeric_limits<real_x>::epsilon();
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    real_x off = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const real_x s = std::norm(a(i, j));
        total += s;
        if (i != j) off += s;
      }
    if (off <= eps * eps * total || off == 0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx_x apq = a(p, q);
        const real_x mag = std::abs(apq);
        if (mag == 0) continue;
        const cplx_x ec = std::conj(apq / mag);
        const real_x app = a(p, p).real();
        const real_x aqq = a(q, q).real();
        const real_x t = jacobi_tangent((aqq - app) / (2 * mag));
        const real_x c = 1 / std::sqrt(t * t + 1);
        const real_x s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const cplx_x arp = a(r, p);
          const cplx_x arq = a(r, q);
          a(r, p) = c * arp - s * ec * arq;
          a(r, q) = s * arp + c * ec * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0;
        a(q, p) = 0;

        for (std::size_t r = 0; r < n; ++r) {
          const cplx_x vrp = v(r, p);
          const cplx_x vrq = v(r, q);
          v(r, p) = c * vrp - s * ec * vrq;
          v(r, q) = s * vrp + c * ec * vrq;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen4 out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::array<real_x, 3> symmetric_eigen(const RMatrix3& input, RMatrix3* vectors) {
  constexpr std::size_t n = 3;
  RMatrix3 a = input;
  RMatrix3 v;
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;

  const real_x eps = std::numeric_limits<real_x>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    real_x off = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a(i, j) * a(i, j);
        if (i != j) off += a(i, j) * a(i, j);
      }
    if (off <= eps * eps * total || off == 0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const real_x apq = a(p, q);
        if (apq == 0) continue;
        const real_x t = jacobi_tangent((a(q, q) - a(p, p)) / (2 * apq));
        const real_x c = 1 / std::sqrt(t * t + 1);
        const real_x s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const real_x arp = a(r, p);
          const real_x arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0;
        for (std::size_t r = 0; r < n; ++r) {
          const real_x vrp = v(r, p);
          const real_x vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  std::array<real_x, 3> values{};
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = a(order[k], order[k]);
    if (vectors)
      for (std::size_t r = 0; r < n; ++r) (*vectors)(r, k) = v(r, order[k]);
  }
  return values;
}

std::array<real_x, 3> symmetric_eigenvalues(const RMatrix3& a) { return symmetric_eigen(a, nullptr); }

}  // namespace spincorr
