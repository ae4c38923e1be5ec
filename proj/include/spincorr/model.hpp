#pragma once

// Two-qubit XYZ Heisenberg model with Dzyaloshinsky-Moriya (D_z) and KSEA
// (Gamma_z) couplings in zero field:
//
//   H = Jx sx sx + Jy sy sy + Jz sz sz + Dz (sx sy - sy sx) + Gz (sx sy + sy sx)
//
// The Gibbs state is an X state; after removing the phases of its two
// off-diagonal entries by a local unitary it is Bell-diagonal, and every
// correlation measure depends on (Jz, r1, r2, T) only.

#include <array>
#include <complex>
#include <optional>

#include "spincorr/density_matrix.hpp"

namespace spincorr {

struct Couplings {
  double jx = 0, jy = 0, jz = 0;
  double dz = 0;  // DM
  double gz = 0;  // KSEA
};

/// r1 = sqrt((Jx-Jy)^2 + 4 Gz^2), r2 = sqrt((Jx+Jy)^2 + 4 Dz^2).
struct EffectiveParams {
  double jz = 0, r1 = 0, r2 = 0;

  friend bool operator==(const EffectiveParams&, const EffectiveParams&) = default;
};

struct Spectrum {
  /// {Jz + r1, Jz - r1, -Jz + r2, -Jz - r2}
  std::array<double, 4> levels{};
  /// Distance from the ground level to the next distinct level (0 if none).
  double gap = 0;

  double ground() const;
};

/// Eigenvalues of the phase-free X state, in the Bell basis order
/// Phi+, Psi+, Psi-, Phi-: p1 = a+|u|, p2 = b+|v|, p3 = b-|v|, p4 = a-|u|.
struct BellSpectrum {
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0;

  std::array<double, 4> values() const { return {p1, p2, p3, p4}; }
};

struct ThermalOrigin {
  EffectiveParams params;
  double beta = 0;
  double log_z = 0;
};

/// X-shaped two-qubit state
///
///     | a  .  .  u |
///     | .  b  v  . |
///     | .  v* b  . |
///     | u* .  .  a |
///
/// The Bell populations are the primary data: for Gibbs states they come
/// straight from Boltzmann weights, which keeps a - |u| relatively accurate
/// when it is exponentially small.
class ThermalXState {
 public:
  static constexpr double kTol = 1e-12;

  /// Validates unit trace, a,b >= 0, a >= |u|, b >= |v| (all within kTol).
  static ThermalXState from_entries(double a, double b, std::complex<double> u, std::complex<double> v);
  static ThermalXState from_populations(const BellSpectrum& p);

  double a() const { return a_; }
  double b() const { return b_; }
  double abs_u() const { return abs_u_; }
  double abs_v() const { return abs_v_; }
  std::complex<double> u() const { return abs_u_ * u_phase_; }
  std::complex<double> v() const { return abs_v_ * v_phase_; }
  std::complex<double> u_phase() const { return u_phase_; }
  std::complex<double> v_phase() const { return v_phase_; }
  const BellSpectrum& populations() const { return p_; }

  bool is_thermal() const { return origin_.has_value(); }
  const std::optional<ThermalOrigin>& origin() const { return origin_; }
  /// NaN for states not built by gibbs_state.
  double beta() const;
  double log_z() const;
  /// Partition function; overflows to +inf for beta*|E| beyond ~709, use log_z().
  double z() const;

  /// Same populations and origin, phases replaced by +1.
  ThermalXState phase_free() const;

 private:
  friend ThermalXState gibbs_state(const EffectiveParams&, double);
  friend ThermalXState gibbs_state(const Couplings&, double);

  ThermalXState() = default;
  void derive_entries();

  BellSpectrum p_;
  double a_ = 0, b_ = 0, abs_u_ = 0, abs_v_ = 0;
  std::complex<double> u_phase_{1.0, 0.0};
  std::complex<double> v_phase_{1.0, 0.0};
  std::optional<ThermalOrigin> origin_;
};

EffectiveParams effective_params(const Couplings& c);

Spectrum spectrum(const EffectiveParams& p);

/// Hamiltonian matrix in the computational basis (used to cross-check the
/// spectrum and the Gibbs state independently).
CMatrix4 hamiltonian_matrix(const Couplings& c);

/// Gibbs state at temperature t (t = +inf allowed, giving beta = 0).
/// Throws DomainError unless t > 0. Phases are +1.
ThermalXState gibbs_state(const EffectiveParams& p, double t);

/// As above, but keeps the complex phases of u and v that the raw couplings
/// produce.
ThermalXState gibbs_state(const Couplings& c, double t);

BellSpectrum bell_probs(const ThermalXState& s);

/// von Neumann entropy in bits, -sum p log2 p with 0 log 0 = 0.
double entropy_bits(const ThermalXState& s);

/// ln Z / ln 2 + beta <E> / ln 2 in terms of (Jz, r1, r2, beta); only
/// defined for Gibbs states.
std::optional<double> entropy_bits_closed_form(const ThermalXState& s);

/// Materialized 4x4 matrix (with the stored phases).
DensityMatrix4 dense_matrix(const ThermalXState& s);

}  // namespace spincorr
