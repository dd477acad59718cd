#include "koszul/simd_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define KOSZUL_X86 1
#endif

namespace koszul {

namespace {

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(c) * x[i]) % p);
}

void scale_scalar(uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * y[i] % p);
}

#ifdef KOSZUL_X86

// Barrett reduction of 8 lanes t < 2^31 by p < 2^15, using M = floor(2^32/p):
// q = (t*M) >> 32 is floor(t/p) or one less, so one conditional subtract fixes r.
__attribute__((target("avx2"))) inline __m256i barrett8(__m256i t, __m256i m, __m256i pv) {
    __m256i pe = _mm256_mul_epu32(t, m);
    __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), m);
    __m256i qe = _mm256_srli_epi64(pe, 32);
    __m256i qo = _mm256_slli_epi64(_mm256_srli_epi64(po, 32), 32);
    __m256i q = _mm256_blend_epi32(qe, qo, 0xAA);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, pv));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

__attribute__((target("avx2"))) void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t c,
                                               std::size_t n, uint32_t p) {
    if (p >= (1u << 15)) {
        axpy_scalar(y, x, c, n, p);
        return;
    }
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i m = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i t = _mm256_add_epi32(yv, _mm256_mullo_epi32(cv, xv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), barrett8(t, m, pv));
    }
    axpy_scalar(y + i, x + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale_avx2(uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    if (p >= (1u << 15)) {
        scale_scalar(y, c, n, p);
        return;
    }
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i m = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i t = _mm256_mullo_epi32(cv, yv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), barrett8(t, m, pv));
    }
    scale_scalar(y + i, c, n - i, p);
}

#endif  // KOSZUL_X86

}  // namespace

bool cpu_has_avx2() {
#ifdef KOSZUL_X86
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const FpKernels& fp_kernels_scalar() {
    static const FpKernels k{axpy_scalar, scale_scalar, "scalar"};
    return k;
}

const FpKernels& fp_kernels_avx2() {
#ifdef KOSZUL_X86
    static const FpKernels k{axpy_avx2, scale_avx2, "avx2"};
    return k;
#else
    return fp_kernels_scalar();
#endif
}

const FpKernels& fp_kernels() {
    static const FpKernels& chosen = cpu_has_avx2() ? fp_kernels_avx2() : fp_kernels_scalar();
    return chosen;
}

}  // namespace koszul
