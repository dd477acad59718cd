// Data-parallel inner loops for dense row operations mod p.
//
// The row-reduction hot path is y <- (y + c*x) mod p over contiguous uint32_t
// rows.  A scalar reference kernel and an AVX2 variant are provided; the active
// set is chosen once at startup from CPU capabilities and can be overridden for
// equivalence testing.  The AVX2 path requires p < 2^15 (so c*x + y < 2^31 fits
// a 32-bit lane before Barrett reduction); wider moduli fall through to scalar.

#ifndef KOSZUL_SIMD_KERNELS_HPP
#define KOSZUL_SIMD_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace koszul {

struct FpKernels {
    // y[i] = (y[i] + c * x[i]) mod p, 0 <= c < p, entries canonical residues
    void (*axpy)(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p);
    // y[i] = (c * y[i]) mod p
    void (*scale)(uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
    const char* name;
};

bool cpu_has_avx2();

const FpKernels& fp_kernels_scalar();
const FpKernels& fp_kernels_avx2();  // valid only if cpu_has_avx2()

// The runtime-selected set (AVX2 when available, else scalar).
const FpKernels& fp_kernels();

}  // namespace koszul

#endif
