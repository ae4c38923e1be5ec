#pragma once

// Randomized self-check of the closed forms against the brute-force oracles,
// plus the mirror-symmetry, phase-irrelevance and local-unitary suites.

#include <cstdint>
#include <string>
#include <vector>

#include "spincorr/model.hpp"

namespace spincorr {

struct VerifyOptions {
  int samples = 500;
  std::uint64_t seed = 42;
  double tol_q = 1e-6;
  double tol_u = 1e-8;
  double tol_f = 1e-8;
  double tol_symmetry = 1e-12;
  double param_max = 5.0;  // Jz, r1, r2 uniform in [0, param_max]
  double t_min = 0.05;     // T log-uniform in [t_min, t_max]
  double t_max = 50.0;
};

struct Violation {
  std::string suite;
  std::string measure;
  EffectiveParams params;
  double t = 0;
  double deviation = 0;
  double tolerance = 0;
};

struct SuiteResult {
  std::string name;
  int points = 0;
  double max_dev_q = 0, max_dev_u = 0, max_dev_f = 0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Deterministic for fixed options. Suites: oracle (closed form vs brute
/// force), symmetry (Jz, r1, r2) <-> (-Jz, r2, r1), phases (raw couplings
/// with complex off-diagonals vs their phase-free state), local-unitary
/// (oracles after I x sigma_x, H x H and random U_A x U_B).
VerifyReport run_verification(const VerifyOptions& opt);

}  // namespace spincorr
