#include "rauzy/arf.hpp"

#include "arf_kernels.hpp"
#include "rauzy/cycles.hpp"

#include <cstdlib>
#include <cstring>

namespace rauzy {

namespace detail {

ArfKernelFn selected_arf_kernel() {
    static const ArfKernelFn fn = [] {
        const char* force = std::getenv("RAUZY_ARF_KERNEL");
        if (force && std::strcmp(force, "scalar") == 0) return &arf_scalar;
        return arf_avx2_available() ? &arf_avx2 : &arf_scalar;
    }();
    return fn;
}

const char* selected_arf_kernel_name() {
    return selected_arf_kernel() == &arf_scalar ? "scalar" : "avx2";
}

} // namespace detail

ArfPair arf(const Permutation& p, int cap) {
    const int n = p.size();
    if (n > cap || n > kArfDefaultCap)
        throw std::invalid_argument("arf: size exceeds subset-sum cap");
    std::uint32_t nc[32] = {};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) < p(j)) {
                nc[i - 1] |= 1u << (j - 1);
                nc[j - 1] |= 1u << (i - 1);
            }
    const detail::ArfAcc acc = detail::selected_arf_kernel()(nc, n);
    return ArfPair{acc.A, acc.Abar};
}

const char* arf_kernel_name() { return detail::selected_arf_kernel_name(); }

int sign_of(const Permutation& p, int cap) {
    const long long ab = arf(p, cap).Abar;
    if (ab == 0) return 0;
    const CycleData cd = cycle_data(p);
    const int exp2 = p.size() + cd.num_cycles();
    if (exp2 % 2 != 0 || (ab < 0 ? -ab : ab) != (1ll << (exp2 / 2)))
        throw std::logic_error("sign_of: |Abar| != 2^{(n+l)/2} for " + p.to_string());
    return ab > 0 ? 1 : -1;
}

InvariantTriple invariant_triple(const Permutation& p, int cap) {
    const CycleData cd = cycle_data(p);
    InvariantTriple t;
    t.lambda = cd.lambda;
    t.rank = cd.rank;
    t.sign = sign_of(p, cap);
    t.n = p.size();
    t.type = cd.type;
    return t;
}

std::string InvariantTriple::to_json() const {
    std::string s = "{\"lambda\":[";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda[i]);
    }
    s += "],\"rank\":" + std::to_string(rank) + ",\"sign\":" + std::to_string(sign) +
         ",\"n\":" + std::to_string(n) + ",\"type\":{\"" + (type.is_H ? "H" : "X") + "\":[" +
         std::to_string(type.a) + ',' + std::to_string(type.b) + "]}}";
    return s;
}

std::string InvariantTriple::short_form() const {
    std::string s;
    if (lambda.empty()) s += "0";
    bool dotted = false;
    for (int x : lambda) dotted |= x >= 10;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i && dotted) s += '.';
        s += std::to_string(lambda[i]);
    }
    s += '|' + std::to_string(rank);
    if (sign > 0) s += '+';
    if (sign < 0) s += '-';
    return s;
}

AbarExpectation expected_abar(const std::vector<int>& lambda, int rank, int n) {
    long long sum = rank;
    int evens = rank % 2 == 0 ? 1 : 0;
    for (int x : lambda) {
        sum += x;
        if (x % 2 == 0) ++evens;
    }
    if (sum != n - 1) throw std::invalid_argument("expected_abar: dimension formula fails");
    if (evens % 2 != 0) throw std::invalid_argument("expected_abar: odd number of even parts");
    if (evens > 0) return AbarExpectation{true, 0};
    const int exp2 = n + static_cast<int>(lambda.size());
    if (exp2 % 2 != 0) throw std::invalid_argument("expected_abar: n+l odd");
    return AbarExpectation{false, 1ll << (exp2 / 2)};
}

} // namespace rauzy
