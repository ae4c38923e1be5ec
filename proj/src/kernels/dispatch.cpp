#include <cstdlib>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"
#include "spincorr/error.hpp"
#include "spincorr/kernels.hpp"

namespace spincorr {

namespace {

bool cpu_has_avx2() {
#if defined(SPINCORR_HAVE_AVX2)
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
#else
  return false;
#endif
}

bool forced_scalar() {
  const char* v = std::getenv("SPINCORR_KERNEL");
  return v != nullptr && std::string_view(v) == "scalar";
}

}  // namespace

const char* to_string(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar:
      return "scalar";
    case KernelIsa::Avx2:
      return "avx2";
  }
  return "?";
}

bool isa_available(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar:
      return true;
    case KernelIsa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

KernelIsa active_isa() {
  if (!forced_scalar() && isa_available(KernelIsa::Avx2)) return KernelIsa::Avx2;
  return KernelIsa::Scalar;
}

void evaluate_branches(KernelIsa isa, const PointBatch& in, const BranchBatch& out) {
  const std::size_t n = in.size();
  for (std::size_t len : {in.r1.size(), in.r2.size(), in.beta.size(), out.q0.size(), out.q1.size(),
                          out.u0.size(), out.u1.size(), out.f0.size(), out.f1.size()})
    if (len != n) throw ValidationError("batch spans differ in length");
  if (!isa_available(isa)) throw ValidationError(std::string("kernel not available: ") + to_string(isa));

  const kernels::Arrays a{in.jz.data(),  in.r1.data(),  in.r2.data(),  in.beta.data(), out.q0.data(),
                          out.q1.data(), out.u0.data(), out.u1.data(), out.f0.data(),   out.f1.data()};
#if defined(SPINCORR_HAVE_AVX2)
  if (isa == KernelIsa::Avx2) {
    kernels::branches_avx2(a, n);
    return;
  }
#endif
  kernels::branches_scalar(a, 0, n);
}

void evaluate_branches(const PointBatch& in, const BranchBatch& out) { evaluate_branches(active_isa(), in, out); }

}  // namespace spincorr
