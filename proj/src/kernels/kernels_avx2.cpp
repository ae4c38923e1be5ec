// AVX2/FMA version of branches_scalar. Compiled with -mavx2 -mfma; only
// called after a CPUID check.

#include <immintrin.h>

#include <cstdint>

#include "kernels_impl.hpp"

namespace spincorr::kernels {

namespace {

using V = __m256d;

inline V splat(double x) { return _mm256_set1_pd(x); }

// 2^k for integer-valued k in [-1022, 1023].
inline V pow2i(V k) {
  const V magic = splat(6755399441055744.0);  // 2^52 + 2^51
  const __m256i bits = _mm256_castpd_si256(_mm256_add_pd(k, magic));
  const __m256i ki = _mm256_sub_epi64(bits, _mm256_castpd_si256(magic));
  return _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52));
}

// exp(x) for x <= 0; 0 below -745.
inline V exp_nonpos(V x) {
  const V lo_cut = splat(-745.2);
  const V underflow = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lo_cut);
  const V n = _mm256_round_pd(_mm256_mul_pd(x, splat(1.4426950408889634)),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  V r = _mm256_fnmadd_pd(n, splat(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(n, splat(1.90821492927058770002e-10), r);
  // Taylor series to degree 13 on |r| <= ln2/2
  V poly = splat(1.0 / 6227020800.0);
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 479001600.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 39916800.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 3628800.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 362880.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 40320.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 5040.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 720.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 120.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 24.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0 / 6.0));
  poly = _mm256_fmadd_pd(poly, r, splat(0.5));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0));
  poly = _mm256_fmadd_pd(poly, r, splat(1.0));
  // split the scale so subnormal results stay representable
  const V n1 = _mm256_floor_pd(_mm256_mul_pd(n, splat(0.5)));
  const V n2 = _mm256_sub_pd(n, n1);
  const V result = _mm256_mul_pd(_mm256_mul_pd(poly, pow2i(n1)), pow2i(n2));
  return _mm256_andnot_pd(underflow, result);
}

// log2(x) for normal positive x.
inline V log2_pos(V x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  V m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));
  // biased exponent as a double via the 2^52 trick
  const __m256i ebits = _mm256_srli_epi64(bits, 52);
  const V magic = splat(4503599627370496.0);  // 2^52
  V e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(ebits, _mm256_castpd_si256(magic))), magic);
  e = _mm256_sub_pd(e, splat(1023.0));
  const V big = _mm256_cmp_pd(m, splat(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, splat(1.0)));
  // ln m = 2 atanh(s), s = (m - 1)/(m + 1), |s| <= 0.172
  const V s = _mm256_div_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_add_pd(m, splat(1.0)));
  const V s2 = _mm256_mul_pd(s, s);
  V poly = splat(1.0 / 21.0);
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 19.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 17.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 15.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 13.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 11.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 9.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 7.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 5.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / 3.0));
  poly = _mm256_fmadd_pd(poly, s2, splat(1.0));
  const V ln_m = _mm256_mul_pd(splat(2.0), _mm256_mul_pd(s, poly));
  return _mm256_fmadd_pd(ln_m, splat(1.4426950408889634), e);
}

inline V xlog2x(V x) {
  const V tiny = splat(1e-300);
  const V keep = _mm256_cmp_pd(x, tiny, _CMP_GE_OQ);
  const V safe = _mm256_max_pd(x, tiny);
  return _mm256_and_pd(keep, _mm256_mul_pd(safe, log2_pos(safe)));
}

inline V harmonic4(V p, V q) {
  const V s = _mm256_add_pd(p, q);
  const V keep = _mm256_cmp_pd(s, splat(1e-300), _CMP_GE_OQ);
  const V h = _mm256_div_pd(_mm256_mul_pd(splat(4.0), _mm256_mul_pd(p, q)), _mm256_max_pd(s, splat(1e-300)));
  return _mm256_and_pd(keep, h);
}

inline V clamp01(V x) { return _mm256_min_pd(_mm256_max_pd(x, splat(0.0)), splat(1.0)); }

}  // namespace

void branches_avx2(const Arrays& a, std::size_t n) {
  const std::size_t vec_end = n - n % 4;
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const V jz = _mm256_loadu_pd(a.jz + i);
    const V r1 = _mm256_loadu_pd(a.r1 + i);
    const V r2 = _mm256_loadu_pd(a.r2 + i);
    const V beta = _mm256_loadu_pd(a.beta + i);

    const V e1 = _mm256_sub_pd(jz, r1);
    const V e2 = _mm256_sub_pd(_mm256_sub_pd(splat(0.0), jz), r2);
    const V e3 = _mm256_add_pd(_mm256_sub_pd(splat(0.0), jz), r2);
    const V e4 = _mm256_add_pd(jz, r1);
    const V emin = _mm256_min_pd(_mm256_min_pd(e1, e2), _mm256_min_pd(e3, e4));
    const V nb = _mm256_sub_pd(splat(0.0), beta);
    const V w1 = exp_nonpos(_mm256_mul_pd(nb, _mm256_sub_pd(e1, emin)));
    const V w2 = exp_nonpos(_mm256_mul_pd(nb, _mm256_sub_pd(e2, emin)));
    const V w3 = exp_nonpos(_mm256_mul_pd(nb, _mm256_sub_pd(e3, emin)));
    const V w4 = exp_nonpos(_mm256_mul_pd(nb, _mm256_sub_pd(e4, emin)));
    const V inv = _mm256_div_pd(splat(1.0), _mm256_add_pd(_mm256_add_pd(w1, w4), _mm256_add_pd(w2, w3)));
    const V p1 = _mm256_mul_pd(w1, inv), p2 = _mm256_mul_pd(w2, inv);
    const V p3 = _mm256_mul_pd(w3, inv), p4 = _mm256_mul_pd(w4, inv);

    const V av = _mm256_mul_pd(splat(0.5), _mm256_add_pd(p1, p4));
    const V bv = _mm256_mul_pd(splat(0.5), _mm256_add_pd(p2, p3));
    const V s_bits = _mm256_sub_pd(splat(0.0), _mm256_add_pd(_mm256_add_pd(xlog2x(p1), xlog2x(p2)),
                                                              _mm256_add_pd(xlog2x(p3), xlog2x(p4))));
    const V q0 = _mm256_sub_pd(_mm256_sub_pd(splat(0.0), s_bits),
                               _mm256_mul_pd(splat(2.0), _mm256_add_pd(xlog2x(av), xlog2x(bv))));
    const V hi = clamp01(_mm256_add_pd(p1, p2));
    const V lo = clamp01(_mm256_add_pd(p3, p4));
    const V q1 = _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(splat(1.0), s_bits), xlog2x(hi)), xlog2x(lo));

    const V wxx = _mm256_mul_pd(splat(2.0), _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(p1, p2)),
                                                          _mm256_sqrt_pd(_mm256_mul_pd(p3, p4))));
    const V wzz = _mm256_mul_pd(splat(2.0), _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(p1, p4)),
                                                          _mm256_sqrt_pd(_mm256_mul_pd(p2, p3))));
    const V mxx = _mm256_add_pd(harmonic4(p1, p2), harmonic4(p3, p4));
    const V mzz = _mm256_add_pd(harmonic4(p1, p4), harmonic4(p2, p3));

    _mm256_storeu_pd(a.q0 + i, q0);
    _mm256_storeu_pd(a.q1 + i, q1);
    _mm256_storeu_pd(a.u0 + i, _mm256_sub_pd(splat(1.0), wzz));
    _mm256_storeu_pd(a.u1 + i, _mm256_sub_pd(splat(1.0), wxx));
    _mm256_storeu_pd(a.f0 + i, _mm256_sub_pd(splat(1.0), mzz));
    _mm256_storeu_pd(a.f1 + i, _mm256_sub_pd(splat(1.0), mxx));
  }
  branches_scalar(a, vec_end, n);
}

}  // namespace spincorr::kernels
