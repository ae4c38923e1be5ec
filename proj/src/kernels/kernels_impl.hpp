#pragma once

#include <cstddef>

namespace spincorr::kernels {

struct Arrays {
  const double *jz, *r1, *r2, *beta;
  double *q0, *q1, *u0, *u1, *f0, *f1;
};

void branches_scalar(const Arrays& a, std::size_t begin, std::size_t end);

#if defined(SPINCORR_HAVE_AVX2)
void branches_avx2(const Arrays& a, std::size_t n);
#endif

}  // namespace spincorr::kernels
