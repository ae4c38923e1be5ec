#pragma once

// Scalar reference arithmetic shared by the per-point API (model,
// correlations) and the scalar batch kernel. The SIMD kernels re-implement
// exactly these steps and are tested against them.

#include <algorithm>
#include <cmath>

namespace spincorr::detail {

/// Bell-basis populations (Phi+, Psi+, Psi-, Phi-) of the Gibbs state and
/// ln Z. Computed as a softmax of -beta*E_i so no exponent ever exceeds 0.
struct Populations {
  double p1, p2, p3, p4;
  double log_z;
};

inline Populations thermal_populations(double jz, double r1, double r2, double beta) {
  // Phi+ <-> jz - r1, Psi+ <-> -jz - r2, Psi- <-> -jz + r2, Phi- <-> jz + r1
  const double e1 = jz - r1, e2 = -jz - r2, e3 = -jz + r2, e4 = jz + r1;
  const double emin = std::min(std::min(e1, e2), std::min(e3, e4));
  const double w1 = std::exp(-beta * (e1 - emin));
  const double w2 = std::exp(-beta * (e2 - emin));
  const double w3 = std::exp(-beta * (e3 - emin));
  const double w4 = std::exp(-beta * (e4 - emin));
  const double sum = (w1 + w4) + (w2 + w3);
  const double inv = 1.0 / sum;
  return {w1 * inv, w2 * inv, w3 * inv, w4 * inv, -beta * emin + std::log(sum)};
}

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

inline double harmonic4(double p, double q) {
  const double s = p + q;
  return s < 1e-300 ? 0.0 : 4.0 * p * q / s;
}

/// The six branch values (Q0, Q1, U0, U1, F0, F1) from Bell populations.
struct BranchValues {
  double q0, q1, u0, u1, f0, f1;
};

struct PForm {
  double s_bits;
  double wxx, wyy, wzz;
  double mxx, myy, mzz;
  double q0, q1;
};

inline PForm p_form(double p1, double p2, double p3, double p4) {
  PForm r{};
  const double a = 0.5 * (p1 + p4);
  const double b = 0.5 * (p2 + p3);
  r.s_bits = -(xlog2x(p1) + xlog2x(p2) + xlog2x(p3) + xlog2x(p4));
  r.q0 = -r.s_bits - 2.0 * (xlog2x(a) + xlog2x(b));
  // (1 +- w)/2 with w = 2(|u| + |v|) are p1 + p2 and p3 + p4
  const double hi = std::clamp(p1 + p2, 0.0, 1.0);
  const double lo = std::clamp(p3 + p4, 0.0, 1.0);
  r.q1 = 1.0 - r.s_bits - xlog2x(hi) - xlog2x(lo);
  r.wxx = 2.0 * (std::sqrt(p1 * p2) + std::sqrt(p3 * p4));
  r.wyy = 2.0 * (std::sqrt(p1 * p3) + std::sqrt(p2 * p4));
  r.wzz = 2.0 * (std::sqrt(p1 * p4) + std::sqrt(p2 * p3));
  r.mxx = harmonic4(p1, p2) + harmonic4(p3, p4);
  r.myy = harmonic4(p1, p3) + harmonic4(p2, p4);
  r.mzz = harmonic4(p1, p4) + harmonic4(p2, p3);
  return r;
}

inline BranchValues branches(double p1, double p2, double p3, double p4) {
  const PForm f = p_form(p1, p2, p3, p4);
  return {f.q0, f.q1, 1.0 - f.wzz, 1.0 - f.wxx, 1.0 - f.mzz, 1.0 - f.mxx};
}

}  // namespace spincorr::detail
