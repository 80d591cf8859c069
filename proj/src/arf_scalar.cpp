#include "arf_kernels.hpp"

#include <bit>

namespace rauzy::detail {

// Reference kernel: plain Gray-code walk. Toggling edge e changes chi by the
// number of present edges non-crossing with e, so only its parity is tracked.
ArfAcc arf_scalar(const std::uint32_t* nc, int n) {
    ArfAcc acc;
    const std::uint64_t total = 1ull << n;
    std::uint32_t mask = 0;
    unsigned chi_par = 0;
    unsigned size_par = 0;
    for (std::uint64_t t = 0;; ++t) {
        const long long s = chi_par ? -1 : 1;
        acc.A += s;
        acc.Abar += size_par ? -s : s;
        if (t + 1 == total) break;
        const int e = std::countr_zero(t + 1);
        chi_par ^= static_cast<unsigned>(std::popcount(mask & nc[e])) & 1u;
        mask ^= 1u << e;
        size_par ^= 1u;
    }
    return acc;
}

} // namespace rauzy::detail
