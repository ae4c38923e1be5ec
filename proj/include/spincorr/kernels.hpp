#pragma once

// Batch evaluation of the six closed-form branch values over many
// (Jz, r1, r2, beta) points. A scalar reference kernel and an AVX2/FMA kernel
// compute the same arithmetic; the best one the CPU supports is picked at
// run time. Set SPINCORR_KERNEL=scalar to force the reference kernel.

#include <cstddef>
#include <span>

namespace spincorr {

enum class KernelIsa { Scalar, Avx2 };

const char* to_string(KernelIsa isa);

/// Structure-of-arrays input; all spans must have the same length.
struct PointBatch {
  std::span<const double> jz, r1, r2, beta;

  std::size_t size() const { return jz.size(); }
};

/// Output spans, same length as the input.
struct BranchBatch {
  std::span<double> q0, q1, u0, u1, f0, f1;
};

/// Compiled in and supported by this CPU.
bool isa_available(KernelIsa isa);

/// Kernel used by the dispatching overload.
KernelIsa active_isa();

/// Throws ValidationError on mismatched span lengths, or if `isa` is not
/// available.
void evaluate_branches(KernelIsa isa, const PointBatch& in, const BranchBatch& out);
void evaluate_branches(const PointBatch& in, const BranchBatch& out);

}  // namespace spincorr
