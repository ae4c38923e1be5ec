#pragma once

// Closed-form discord Q, local quantum uncertainty U and local quantum Fisher
// information F for the Bell-diagonal Gibbs states of the model. Each measure
// is the minimum of two branches; branch 0 is active for r1 + r2 < 2|Jz| and
// branch 1 for r1 + r2 > 2|Jz|.

#include <array>
#include <optional>

#include "spincorr/model.hpp"

namespace spincorr {

enum class Branch { Zero, One, Tie };

const char* to_string(Branch b);

struct BranchPair {
  static constexpr double kTieTol = 1e-12;

  double branch0 = 0;
  double branch1 = 0;
  Branch active = Branch::Tie;
  double value = 0;

  /// Tie when |b0 - b1| <= kTieTol; value is then b0.
  static BranchPair from(double b0, double b1);
};

/// Diagonal of the W (LQU) or M (LQFI) matrix, which is diagonal for these
/// states.
struct DiagonalXYZ {
  double xx = 0, yy = 0, zz = 0;
};

struct CorrelationResult {
  BranchPair q;
  BranchPair u;
  BranchPair f;
  DiagonalXYZ w_eigs;
  DiagonalXYZ m_eigs;
  double s_bits = 0;
  double w_param = 0;  // 2(|u| + |v|)
};

BranchPair discord(const ThermalXState& s);
BranchPair lqu(const ThermalXState& s);
BranchPair lqfi(const ThermalXState& s);

/// All three measures plus the W/M eigenvalues, entropy and w.
CorrelationResult correlations(const ThermalXState& s);

/// W eigenvalues as square-root products of Bell populations.
DiagonalXYZ w_eigenvalues(const BellSpectrum& p);
/// W eigenvalues as 4 cosh(...)/Z; Gibbs states only.
std::optional<DiagonalXYZ> w_eigenvalues_explicit(const ThermalXState& s);

/// M eigenvalues as 4 p_m p_n / (p_m + p_n) sums (vanishing denominators
/// contribute 0).
DiagonalXYZ m_eigenvalues(const BellSpectrum& p);
/// M eigenvalues in hyperbolic form; Gibbs states only.
std::optional<DiagonalXYZ> m_eigenvalues_explicit(const ThermalXState& s);

/// Largest absolute difference between the population form and the explicit
/// hyperbolic form over the six W/M eigenvalues; nullopt for non-Gibbs states.
std::optional<double> explicit_form_deviation(const ThermalXState& s);

struct OrderingCheck {
  static constexpr double kSlack = 1e-9;
  double u = 0, q = 0, f = 0;
  bool u_le_q = false;
  bool q_le_f = false;
  bool holds() const { return u_le_q && q_le_f; }
};

OrderingCheck ordering_check(const ThermalXState& s);

/// r1 + r2 - 2|Jz|: negative in the branch-0 region, positive in branch-1.
double branch_boundary(const EffectiveParams& p);

/// ln2 + 2(a ln a + b ln b) - x ln x - (1-x) ln(1-x), x = (1+w)/2. Equals
/// ln2 * (Q1 - Q0).
double discord_boundary_residual(const ThermalXState& s);

/// Leading high-temperature coefficients: measure ~ c2/T^2 + c3/T^3.
struct AsymptoticCoefficients {
  double c2 = 0, c3 = 0;
};

struct HighTCoefficients {
  AsymptoticCoefficients q0, q1, u0, u1, f0, f1;

  /// Order: Q0, Q1, U0, U1, F0, F1.
  std::array<AsymptoticCoefficients, 6> all() const { return {q0, q1, u0, u1, f0, f1}; }
};

HighTCoefficients high_t_coefficients(const EffectiveParams& p);

struct Jz0ClosedForms {
  double lqu = 0;   // 1 - sech((r1 - r2) / 2T)
  double lqfi = 0;  // tanh^2((r1 - r2) / 2T)
};

/// Throws DomainError unless t > 0.
Jz0ClosedForms jz0_closed_forms(double r1, double r2, double t);

}  // namespace spincorr
