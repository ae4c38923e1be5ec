#include "spincorr/correlations.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <initializer_list>

#include "spincorr/detail/thermal.hpp"
#include "spincorr/error.hpp"

namespace spincorr {

namespace {

const double kLn2 = std::log(2.0);

double log_sum_exp(std::initializer_list<double> xs) {
  const double m = std::max(xs);
  double s = 0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - kLn2;
}

// 4 cosh(x) / Z
double four_cosh_over_z(double x, double log_z) {
  return 2.0 * (std::exp(x - log_z) + std::exp(-x - log_z));
}

}  // namespace

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Zero:
      return "0";
    case Branch::One:
      return "1";
    case Branch::Tie:
      return "tie";
  }
  return "?";
}

BranchPair BranchPair::from(double b0, double b1) {
  BranchPair r;
  r.branch0 = b0;
  r.branch1 = b1;
  if (std::abs(b0 - b1) <= kTieTol) {
    r.active = Branch::Tie;
    r.value = b0;
  } else if (b0 < b1) {
    r.active = Branch::Zero;
    r.value = b0;
  } else {
    r.active = Branch::One;
    r.value = b1;
  }
  return r;
}

DiagonalXYZ w_eigenvalues(const BellSpectrum& p) {
  const detail::PForm f = detail::p_form(p.p1, p.p2, p.p3, p.p4);
  return {f.wxx, f.wyy, f.wzz};
}

DiagonalXYZ m_eigenvalues(const BellSpectrum& p) {
  const detail::PForm f = detail::p_form(p.p1, p.p2, p.p3, p.p4);
  return {f.mxx, f.myy, f.mzz};
}

std::optional<DiagonalXYZ> w_eigenvalues_explicit(const ThermalXState& s) {
  if (!s.is_thermal()) return std::nullopt;
  const ThermalOrigin& o = *s.origin();
  const double b = o.beta;
  const EffectiveParams& q = o.params;
  return DiagonalXYZ{four_cosh_over_z(b * (q.r1 + q.r2) / 2, o.log_z),
                     four_cosh_over_z(b * (q.r1 - q.r2) / 2, o.log_z), four_cosh_over_z(b * q.jz, o.log_z)};
}

std::optional<DiagonalXYZ> m_eigenvalues_explicit(const ThermalXState& s) {
  if (!s.is_thermal()) return std::nullopt;
  const ThermalOrigin& o = *s.origin();
  const double b = o.beta;
  const double bj = b * o.params.jz, b1 = b * o.params.r1, b2 = b * o.params.r2;
  // N = e^{bJ} cosh(b r1) + e^{-bJ} cosh(b r2)
  const double log_n = log_sum_exp({bj + b1, bj - b1, -bj + b2, -bj - b2}) - kLn2;
  const double log_dx = log_sum_exp({2 * bj, -2 * bj, b1 - b2, b2 - b1}) - kLn2;
  const double log_dy = log_sum_exp({2 * bj, -2 * bj, b1 + b2, -b1 - b2}) - kLn2;
  const double log_dz = log_cosh(b1) + log_cosh(b2);
  return DiagonalXYZ{4.0 * std::exp(log_n - log_dx - o.log_z), 4.0 * std::exp(log_n - log_dy - o.log_z),
                     2.0 * std::exp(log_n - log_dz - o.log_z)};
}

std::optional<double> explicit_form_deviation(const ThermalXState& s) {
  const auto we = w_eigenvalues_explicit(s);
  const auto me = m_eigenvalues_explicit(s);
  if (!we || !me) return std::nullopt;
  const DiagonalXYZ w = w_eigenvalues(s.populations());
  const DiagonalXYZ m = m_eigenvalues(s.populations());
  return std::max({std::abs(w.xx - we->xx), std::abs(w.yy - we->yy), std::abs(w.zz - we->zz),
                   std::abs(m.xx - me->xx), std::abs(m.yy - me->yy), std::abs(m.zz - me->zz)});
}

BranchPair discord(const ThermalXState& s) {
  const BellSpectrum& p = s.populations();
  const detail::PForm f = detail::p_form(p.p1, p.p2, p.p3, p.p4);
  return BranchPair::from(f.q0, f.q1);
}

BranchPair lqu(const ThermalXState& s) {
  const DiagonalXYZ w = w_eigenvalues(s.populations());
  return BranchPair::from(1.0 - w.zz, 1.0 - w.xx);
}

BranchPair lqfi(const ThermalXState& s) {
  const DiagonalXYZ m = m_eigenvalues(s.populations());
  return BranchPair::from(1.0 - m.zz, 1.0 - m.xx);
}

CorrelationResult correlations(const ThermalXState& s) {
  const BellSpectrum& p = s.populations();
  const detail::PForm f = detail::p_form(p.p1, p.p2, p.p3, p.p4);
  CorrelationResult r;
  r.q = BranchPair::from(f.q0, f.q1);
  r.u = BranchPair::from(1.0 - f.wzz, 1.0 - f.wxx);
  r.f = BranchPair::from(1.0 - f.mzz, 1.0 - f.mxx);
  r.w_eigs = {f.wxx, f.wyy, f.wzz};
  r.m_eigs = {f.mxx, f.myy, f.mzz};
  r.s_bits = f.s_bits;
  r.w_param = std::clamp(2.0 * (s.abs_u() + s.abs_v()), 0.0, 1.0);
#ifndef NDEBUG
  if (const auto dev = explicit_form_deviation(s)) assert(*dev <= 1e-10);
#endif
  return r;
}

OrderingCheck ordering_check(const ThermalXState& s) {
  const CorrelationResult r = correlations(s);
  OrderingCheck c;
  c.u = r.u.value;
  c.q = r.q.value;
  c.f = r.f.value;
  c.u_le_q = c.u <= c.q + OrderingCheck::kSlack;
  c.q_le_f = c.q <= c.f + OrderingCheck::kSlack;
  return c;
}

double branch_boundary(const EffectiveParams& p) { return p.r1 + p.r2 - 2.0 * std::abs(p.jz); }

double discord_boundary_residual(const ThermalXState& s) {
  const auto xlnx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
  const BellSpectrum& p = s.populations();
  const double hi = std::clamp(p.p1 + p.p2, 0.0, 1.0);
  const double lo = std::clamp(p.p3 + p.p4, 0.0, 1.0);
  return kLn2 + 2.0 * (xlnx(s.a()) + xlnx(s.b())) - xlnx(hi) - xlnx(lo);
}

HighTCoefficients high_t_coefficients(const EffectiveParams& p) {
  const double j = p.jz, r1 = p.r1, r2 = p.r2;
  const double odd = j * (r2 * r2 - r1 * r1) / 4.0 + 0.0;
  const double even0 = (r1 * r1 + r2 * r2) / 4.0;
  const double even1 = (4.0 * j * j + (r1 - r2) * (r1 - r2)) / 8.0;
  HighTCoefficients c;
  c.u0 = {even0, odd};
  c.u1 = {even1, odd};
  c.q0 = {even0 / kLn2, odd / kLn2};
  c.q1 = {even1 / kLn2, odd / kLn2};
  c.f0 = {2.0 * even0, 2.0 * odd};
  c.f1 = {2.0 * even1, 2.0 * odd};
  return c;
}

Jz0ClosedForms jz0_closed_forms(double r1, double r2, double t) {
  if (!(t > 0)) throw DomainError("temperature must be positive");
  const double x = (r1 - r2) / (2.0 * t);
  const double th = std::tanh(x);
  return {1.0 - 1.0 / std::cosh(x), th * th};
}

}  // namespace spincorr
