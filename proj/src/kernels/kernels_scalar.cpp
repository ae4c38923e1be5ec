#include "kernels_impl.hpp"

#include "spincorr/detail/thermal.hpp"

namespace spincorr::kernels {

void branches_scalar(const Arrays& a, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    const detail::Populations p = detail::thermal_populations(a.jz[i], a.r1[i], a.r2[i], a.beta[i]);
    const detail::BranchValues b = detail::branches(p.p1, p.p2, p.p3, p.p4);
    a.q0[i] = b.q0;
    a.q1[i] = b.q1;
    a.u0[i] = b.u0;
    a.u1[i] = b.u1;
    a.f0[i] = b.f0;
    a.f1[i] = b.f1;
  }
}

}  // namespace spincorr::kernels
