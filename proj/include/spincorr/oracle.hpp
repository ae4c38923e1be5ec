#pragma once

// Brute-force evaluation of discord, LQU and LQFI on arbitrary two-qubit
// density matrices, straight from their definitions. Independent of the
// closed forms in correlations.hpp; used to validate them. The measured
// subsystem is always qubit A (first tensor factor).

#include <array>
#include <random>

#include "spincorr/density_matrix.hpp"
#include "spincorr/linalg.hpp"

namespace spincorr::oracle {

struct EigenSystem4 {
  std::array<real_x, 4> values{};  // descending, clamped to [0, 1]
  CMatrix4 vectors;                // orthonormal columns
};

constexpr real_x kNegativeEigenvalueTol = 1e-10L;

/// Throws ValidationError if an eigenvalue is below -1e-10.
EigenSystem4 eig4(const DensityMatrix4& rho);

/// rho^{1/2} = V diag(sqrt(lambda)) V^dagger.
CMatrix4 sqrt_density(const DensityMatrix4& rho);

/// sigma_mu (x) I for mu = 0, 1, 2.
const std::array<CMatrix4, 3>& local_paulis_a();

/// W_{mu nu} = Tr{ rho^{1/2} (s_mu x I) rho^{1/2} (s_nu x I) }.
RMatrix3 w_matrix(const DensityMatrix4& rho);

/// M_{mu nu} = sum_{m,n} 2 p_m p_n / (p_m + p_n) <m|s_mu x I|n><n|s_nu x I|m>
/// over pairs with p_m + p_n > 1e-14 (diagonal m = n terms included).
RMatrix3 m_matrix(const DensityMatrix4& rho);

double lqu_bruteforce(const DensityMatrix4& rho);
double lqfi_bruteforce(const DensityMatrix4& rho);

/// Quantum Fisher information F(rho, H) for H = (n . sigma) (x) I, |n| = 1:
/// (1/2) sum_{m,n} (p_m - p_n)^2 / (p_m + p_n) |<m|H|n>|^2.
double fisher_information(const DensityMatrix4& rho, const std::array<double, 3>& direction);

struct MeasurementDirection {
  double theta = 0;  // [0, pi]
  double phi = 0;    // [0, 2 pi)

  std::array<double, 3> unit_vector() const;
};

struct DiscordSearch {
  int n_theta = 181;
  int n_phi = 72;
  int refine_iters = 40;
};

struct DiscordResult {
  double value = 0;
  MeasurementDirection direction;
  /// min over directions of sum_k q_k S(rho_B|k), in bits
  double conditional_entropy = 0;
};

/// Q = I - J minimized over projective measurements {(I +- n.sigma)/2} on
/// qubit A: grid over (theta, phi), then a pattern search around the best
/// grid cells. Deterministic.
DiscordResult discord_bruteforce(const DensityMatrix4& rho, const DiscordSearch& search = {});

/// sum_k q_k S(rho_B|k) for the measurement along `n`; outcomes with
/// q_k < 1e-14 contribute 0.
double measured_conditional_entropy(const DensityMatrix4& rho, const std::array<double, 3>& n);

double entropy_bits(const DensityMatrix4& rho);
CMatrix2 reduced_a(const DensityMatrix4& rho);
CMatrix2 reduced_b(const DensityMatrix4& rho);

struct FixedTransforms {
  CMatrix4 r;   // computational -> Bell basis rotation (not local)
  CMatrix4 o;   // I (x) sigma_x
  CMatrix4 h2;  // H (x) H
};

const FixedTransforms& fixed_transforms();

/// Haar-random 2x2 unitary.
CMatrix2 random_unitary2(std::mt19937_64& rng);

CMatrix4 on_qubit_a(const CMatrix2& u);
CMatrix4 on_qubit_b(const CMatrix2& u);

}  // namespace spincorr::oracle
