#include "spincorr/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spincorr/detail/thermal.hpp"
#include "spincorr/error.hpp"

namespace spincorr {

double Spectrum::ground() const { return *std::min_element(levels.begin(), levels.end()); }

DensityMatrix4::DensityMatrix4(const CMatrix4& m) : m_(m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTol)
        throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m.trace() - cplx_x(1)) > kTraceTol)
    throw ValidationError("density matrix trace differs from 1");
}

DensityMatrix4 DensityMatrix4::conjugated(const CMatrix4& u) const {
  CMatrix4 r = u * m_ * u.adjoint();
  // restore exact Hermiticity lost to rounding
  for (std::size_t i = 0; i < 4; ++i) {
    r(i, i) = r(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) {
      const cplx_x avg = (r(i, j) + std::conj(r(j, i))) / real_x(2);
      r(i, j) = avg;
      r(j, i) = std::conj(avg);
    }
  }
  return DensityMatrix4(r);
}

void ThermalXState::derive_entries() {
  a_ = 0.5 * (p_.p1 + p_.p4);
  abs_u_ = 0.5 * (p_.p1 - p_.p4);
  b_ = 0.5 * (p_.p2 + p_.p3);
  abs_v_ = 0.5 * (p_.p2 - p_.p3);
}

ThermalXState ThermalXState::from_entries(double a, double b, std::complex<double> u, std::complex<double> v) {
  const double au = std::abs(u), av = std::abs(v);
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(au) && std::isfinite(av)))
    throw ValidationError("X-state entries must be finite");
  if (a < -kTol || b < -kTol) throw ValidationError("X-state diagonal entries must be non-negative");
  if (std::abs(2.0 * (a + b) - 1.0) > kTol) throw ValidationError("X-state trace 2(a+b) differs from 1");
  if (au > a + kTol || av > b + kTol) throw ValidationError("X-state is not positive semidefinite");

  ThermalXState s;
  s.a_ = std::max(a, 0.0);
  s.b_ = std::max(b, 0.0);
  s.abs_u_ = std::min(au, s.a_);
  s.abs_v_ = std::min(av, s.b_);
  s.u_phase_ = au > 0 ? u / au : std::complex<double>(1.0, 0.0);
  s.v_phase_ = av > 0 ? v / av : std::complex<double>(1.0, 0.0);
  s.p_ = {s.a_ + s.abs_u_, s.b_ + s.abs_v_, s.b_ - s.abs_v_, s.a_ - s.abs_u_};
  return s;
}

ThermalXState ThermalXState::from_populations(const BellSpectrum& p) {
  for (double x : p.values())
    if (!(x >= -kTol && x <= 1.0 + kTol)) throw ValidationError("Bell population outside [0, 1]");
  if (std::abs(p.p1 + p.p2 + p.p3 + p.p4 - 1.0) > kTol)
    throw ValidationError("Bell populations do not sum to 1");
  ThermalXState s;
  s.p_ = {std::max(p.p1, 0.0), std::max(p.p2, 0.0), std::max(p.p3, 0.0), std::max(p.p4, 0.0)};
  s.derive_entries();
  return s;
}

double ThermalXState::beta() const {
  return origin_ ? origin_->beta : std::numeric_limits<double>::quiet_NaN();
}

double ThermalXState::log_z() const {
  return origin_ ? origin_->log_z : std::numeric_limits<double>::quiet_NaN();
}

double ThermalXState::z() const { return std::exp(log_z()); }

ThermalXState ThermalXState::phase_free() const {
  ThermalXState s = *this;
  s.u_phase_ = s.v_phase_ = std::complex<double>(1.0, 0.0);
  return s;
}

EffectiveParams effective_params(const Couplings& c) {
  return {c.jz, std::hypot(c.jx - c.jy, 2.0 * c.gz), std::hypot(c.jx + c.jy, 2.0 * c.dz)};
}

Spectrum spectrum(const EffectiveParams& p) {
  Spectrum s;
  s.levels = {p.jz + p.r1, p.jz - p.r1, -p.jz + p.r2, -p.jz - p.r2};
  std::array<double, 4> sorted = s.levels;
  std::sort(sorted.begin(), sorted.end());
  double scale = 1.0;
  for (double e : sorted) scale = std::max(scale, std::abs(e));
  const double tol = 1e-12 * scale;
  s.gap = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (sorted[i] - sorted[0] > tol) {
      s.gap = sorted[i] - sorted[0];
      break;
    }
  }
  return s;
}

CMatrix4 hamiltonian_matrix(const Couplings& c) {
  using namespace pauli;
  const CMatrix4 xx = kron(x(), x()), yy = kron(y(), y()), zz = kron(z(), z());
  const CMatrix4 xy = kron(x(), y()), yx = kron(y(), x());
  return cplx_x(c.jx) * xx + cplx_x(c.jy) * yy + cplx_x(c.jz) * zz + cplx_x(c.dz) * (xy - yx) +
         cplx_x(c.gz) * (xy + yx);
}

namespace {

double inverse_temperature(double t) {
  if (!(t > 0)) throw DomainError("temperature must be positive");
  const double beta = 1.0 / t;
  if (std::isinf(beta)) throw DomainError("temperature too small to represent 1/T");
  return beta;
}

}  // namespace

ThermalXState gibbs_state(const EffectiveParams& p, double t) {
  const double beta = inverse_temperature(t);
  const detail::Populations pop = detail::thermal_populations(p.jz, p.r1, p.r2, beta);
  ThermalXState s;
  s.p_ = {pop.p1, pop.p2, pop.p3, pop.p4};
  s.derive_entries();
  s.origin_ = ThermalOrigin{p, beta, pop.log_z};
  return s;
}

ThermalXState gibbs_state(const Couplings& c, double t) {
  const EffectiveParams p = effective_params(c);
  ThermalXState s = gibbs_state(p, t);
  // u = -(Jx - Jy - 2i Gz)/r1 |u|,  v = -(Jx + Jy + 2i Dz)/r2 |v|
  if (p.r1 > 0) s.u_phase_ = -std::complex<double>(c.jx - c.jy, -2.0 * c.gz) / p.r1;
  if (p.r2 > 0) s.v_phase_ = -std::complex<double>(c.jx + c.jy, 2.0 * c.dz) / p.r2;
  return s;
}

BellSpectrum bell_probs(const ThermalXState& s) { return s.populations(); }

double entropy_bits(const ThermalXState& s) {
  const BellSpectrum& p = s.populations();
  return -(detail::xlog2x(p.p1) + detail::xlog2x(p.p2) + detail::xlog2x(p.p3) + detail::xlog2x(p.p4));
}

std::optional<double> entropy_bits_closed_form(const ThermalXState& s) {
  if (!s.is_thermal()) return std::nullopt;
  const ThermalOrigin& o = *s.origin();
  const EffectiveParams& q = o.params;
  const double mean_energy_term =
      q.r1 * s.abs_u() - q.jz * s.a() + q.r2 * s.abs_v() + q.jz * s.b();
  return (o.log_z - 2.0 * o.beta * mean_energy_term) / std::log(2.0);
}

DensityMatrix4 dense_matrix(const ThermalXState& s) {
  const BellSpectrum& p = s.populations();
  const real_x p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4;
  const real_x a = (p1 + p4) / 2, au = (p1 - p4) / 2;
  const real_x b = (p2 + p3) / 2, av = (p2 - p3) / 2;
  // renormalize the phases in extended precision: a unit-modulus error of
  // one double ulp would shift the small eigenvalue a - |u| by ~1e-16
  const auto unit = [](std::complex<double> z) {
    const cplx_x w(z.real(), z.imag());
    return w / std::abs(w);
  };
  const cplx_x u = au * unit(s.u_phase());
  const cplx_x v = av * unit(s.v_phase());
  CMatrix4 m;
  m(0, 0) = a;
  m(3, 3) = a;
  m(1, 1) = b;
  m(2, 2) = b;
  m(0, 3) = u;
  m(3, 0) = std::conj(u);
  m(1, 2) = v;
  m(2, 1) = std::conj(v);
  // populations may sum to 1 only up to a few ulps of double
  const real_x tr = 2 * (a + b);
  for (auto& x : m.m) x /= tr;
  return DensityMatrix4(m);
}

}  // namespace spincorr
