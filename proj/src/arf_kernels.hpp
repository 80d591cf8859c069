#pragma once

#include <cstdint>

namespace rauzy::detail {

struct ArfAcc {
    long long A = 0;
    long long Abar = 0;
};

// nc[e] = bitmask of edges non-crossing with edge e (bit e itself clear),
// 0 <= e < n, n <= 28. Both kernels walk the full 2^n subset space.
using ArfKernelFn = ArfAcc (*)(const std::uint32_t* nc, int n);

ArfAcc arf_scalar(const std::uint32_t* nc, int n);

bool arf_avx2_available();
ArfAcc arf_avx2(const std::uint32_t* nc, int n);  // call only when available

ArfKernelFn selected_arf_kernel();
const char* selected_arf_kernel_name();

} // namespace rauzy::detail
