#pragma once

#include "spincorr/linalg.hpp"

namespace spincorr {

/// Two-qubit density matrix in the computational basis |00>,|01>,|10>,|11>
/// (first tensor factor = qubit A). Construction checks Hermiticity and unit
/// trace to 1e-12; positivity is checked where an eigen-decomposition is
/// taken anyway (see oracle::eig4).
class DensityMatrix4 {
 public:
  static constexpr real_x kHermitianTol = 1e-12L;
  static constexpr real_x kTraceTol = 1e-12L;

  explicit DensityMatrix4(const CMatrix4& m);

  const CMatrix4& matrix() const { return m_; }
  const cplx_x& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// U rho U^dagger.
  DensityMatrix4 conjugated(const CMatrix4& u) const;

 private:
  CMatrix4 m_;
};

}  // namespace spincorr
