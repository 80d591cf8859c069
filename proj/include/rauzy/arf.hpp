#pragma once

#include "rauzy/cycles.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

inline constexpr int kArfDefaultCap = 28;

struct ArfPair {
    long long A = 0;
    long long Abar = 0;
};

// Exact A and Abar by summation over all 2^n edge subsets, with an
// incremental Gray-code update of the non-crossing count.
ArfPair arf(const Permutation& p, int cap = kArfDefaultCap);

// Sign of Abar. When nonzero, |Abar| is checked against 2^{(n+l)/2}.
int sign_of(const Permutation& p, int cap = kArfDefaultCap);

struct AbarExpectation {
    bool is_zero = false;
    long long magnitude = 0;  // meaningful when !is_zero; sign undetermined
};

// Value forced for |Abar| by (lambda, rank) alone. Throws when the even
// parts of lambda u {rank} are odd in number (no such invariant exists).
AbarExpectation expected_abar(const std::vector<int>& lambda, int rank, int n);

// name of the subset-sum kernel picked at runtime ("scalar", "avx2")
const char* arf_kernel_name();

struct InvariantTriple {
    std::vector<int> lambda;  // sorted descending
    int rank = 0;
    int sign = 0;
    int n = 0;
    PermType type;

    bool operator==(const InvariantTriple& o) const {
        return lambda == o.lambda && rank == o.rank && sign == o.sign && n == o.n;
    }
    // {"lambda":[...],"rank":r,"sign":s,"n":n,"type":{"X":[r,i]}}
    std::string to_json() const;
    // the "lam|r s" table shorthand, e.g. "22|1", "3|3-"
    std::string short_form() const;
};

InvariantTriple invariant_triple(const Permutation& p, int cap = kArfDefaultCap);

} // namespace rauzy
