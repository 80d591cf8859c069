#include "arf_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <bit>
#include <immintrin.h>

namespace rauzy::detail {

bool arf_avx2_available() { return __builtin_cpu_supports("avx2"); }

// Eight lanes, one per subset of the first three edges; the remaining n-3
// edges are walked by a single Gray code shared across lanes. Per step every
// lane toggles the same edge e, so the chi-parity flip splits into a scalar
// part (present high edges non-crossing with e) and a per-lane constant
// (low edges of the lane non-crossing with e), precomputed as one byte.
ArfAcc arf_avx2(const std::uint32_t* nc, int n) {
    if (n < 4) return arf_scalar(nc, n);

    const int h = n - 3;
    std::uint32_t nc_hi[32];
    unsigned char delta8[32];
    for (int e = 0; e < h; ++e) {
        nc_hi[e] = nc[e + 3] >> 3;
        unsigned char byte = 0;
        for (int l = 0; l < 8; ++l) {
            const unsigned bits = static_cast<unsigned>(l) & nc[e + 3] & 7u;
            if (std::popcount(bits) & 1) byte |= static_cast<unsigned char>(1u << l);
        }
        delta8[e] = byte;
    }

    alignas(32) std::int32_t sa0[8], sb0[8];
    for (int l = 0; l < 8; ++l) {
        unsigned chi_lo = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if ((l >> a & 1) && (l >> b & 1) && (nc[a] >> b & 1)) chi_lo ^= 1u;
        const unsigned size_lo = static_cast<unsigned>(std::popcount(static_cast<unsigned>(l)));
        sa0[l] = chi_lo ? -1 : 1;
        sb0[l] = ((size_lo + chi_lo) & 1) ? -1 : 1;
    }

    __m256i sA = _mm256_load_si256(reinterpret_cast<const __m256i*>(sa0));
    __m256i sB = _mm256_load_si256(reinterpret_cast<const __m256i*>(sb0));
    __m256i accA = _mm256_setzero_si256();
    __m256i accB = _mm256_setzero_si256();
    const __m256i lanebits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);

    const std::uint64_t total = 1ull << h;
    std::uint32_t mhi = 0;
    for (std::uint64_t t = 0;; ++t) {
        accA = _mm256_add_epi32(accA, sA);
        accB = _mm256_add_epi32(accB, sB);
        if (t + 1 == total) break;
        const int e = std::countr_zero(t + 1);
        const unsigned phi = static_cast<unsigned>(std::popcount(mhi & nc_hi[e])) & 1u;
        mhi ^= 1u << e;
        const unsigned fa = delta8[e] ^ (phi ? 0xFFu : 0x00u);
        const unsigned fb = fa ^ 0xFFu;  // the |I| parity flips every step
        const __m256i va = _mm256_set1_epi32(static_cast<int>(fa));
        const __m256i vb = _mm256_set1_epi32(static_cast<int>(fb));
        const __m256i ma = _mm256_cmpeq_epi32(_mm256_and_si256(va, lanebits), lanebits);
        const __m256i mb = _mm256_cmpeq_epi32(_mm256_and_si256(vb, lanebits), lanebits);
        sA = _mm256_sub_epi32(_mm256_xor_si256(sA, ma), ma);
        sB = _mm256_sub_epi32(_mm256_xor_si256(sB, mb), mb);
    }

    alignas(32) std::int32_t outA[8], outB[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(outA), accA);
    _mm256_store_si256(reinterpret_cast<__m256i*>(outB), accB);
    ArfAcc acc;
    for (int l = 0; l < 8; ++l) {
        acc.A += outA[l];
        acc.Abar += outB[l];
    }
    return acc;
}

} // namespace rauzy::detail

#else

namespace rauzy::detail {

bool arf_avx2_available() { return false; }
ArfAcc arf_avx2(const std::uint32_t* nc, int n) { return arf_scalar(nc, n); }

} // namespace rauzy::detail

#endif
