#include <doctest.h>

#include "arf_kernels.hpp"
#include "rauzy/arf.hpp"
#include "rauzy/cycles.hpp"
#include "rauzy/ops.hpp"

#include <numeric>
#include <random>

using namespace rauzy;

namespace {

// Independent oracle: chi recomputed from scratch for every subset.
ArfPair arf_oracle(const Permutation& p) {
    const int n = p.size();
    ArfPair out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> edges;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) edges.push_back(i + 1);
        const long long c = chi_restricted(p, edges);
        const long long s = (c % 2 == 0) ? 1 : -1;
        out.A += s;
        out.Abar += (edges.size() % 2 == 0) ? s : -s;
    }
    return out;
}

Permutation random_irreducible(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (;;) {
        std::shuffle(v.begin(), v.end(), rng);
        Permutation p(v);
        if (is_irreducible(p)) return p;
    }
}

} // namespace

TEST_CASE("tiny values") {
    const ArfPair a1 = arf(Permutation::parse("1"));
    CHECK(a1.A == 2);
    CHECK(a1.Abar == 0);
    CHECK(arf(Permutation::parse("1 2")).Abar == -2);
}

TEST_CASE("fig.exarf subset contributes (-1)^{5+8} = -1") {
    const Permutation p = Permutation::parse("2 5 1 4 7 8 3 9 6");
    const std::vector<int> I = {1, 2, 6, 8, 9};
    const long long c = chi_restricted(p, I);
    CHECK(c == 8);
    const long long contrib = ((static_cast<long long>(I.size()) + c) % 2 == 0) ? 1 : -1;
    CHECK(contrib == -1);
}

TEST_CASE("kernel agrees with the from-scratch oracle") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 9; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<int> v(n);
            std::iota(v.begin(), v.end(), 1);
            std::shuffle(v.begin(), v.end(), rng);
            const Permutation p(v);
            const ArfPair got = arf(p);
            const ArfPair want = arf_oracle(p);
            CHECK(got.A == want.A);
            CHECK(got.Abar == want.Abar);
        }
}

TEST_CASE("scalar and avx2 kernels are equivalent") {
    if (!detail::arf_avx2_available()) {
        MESSAGE("avx2 not available on this host; skipping");
        return;
    }
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = trial < 4 ? 17 + trial : 1 + static_cast<int>(rng() % 16);
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        const Permutation p(v);
        std::uint32_t nc[32] = {};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (p(i) < p(j)) {
                    nc[i - 1] |= 1u << (j - 1);
                    nc[j - 1] |= 1u << (i - 1);
                }
        const detail::ArfAcc s = detail::arf_scalar(nc, n);
        const detail::ArfAcc x = detail::arf_avx2(nc, n);
        CHECK(s.A == x.A);
        CHECK(s.Abar == x.Abar);
    }
}

TEST_CASE("sign of identities per size mod 8") {
    CHECK(sign_of(Permutation::identity(8)) == 1);
    CHECK(sign_of(Permutation::identity(10)) == -1);
    CHECK(sign_of(Permutation::identity(9)) == 0);
}

TEST_CASE("even part in lambda u {r} forces Abar = 0") {
    const Permutation p = Permutation::parse("4 5 1 2 6 3");  // lambda {2,2}
    CHECK(arf(p).Abar == 0);
    CHECK(sign_of(p) == 0);
}

TEST_CASE("sign invariant under L, random trials") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Permutation p = random_irreducible(rng, n);
        CHECK(arf(apply_L(p)).Abar == arf(p).Abar);
    }
}

TEST_CASE("expected_abar") {
    const AbarExpectation z = expected_abar({2, 2}, 1, 6);
    CHECK(z.is_zero);
    const AbarExpectation e2 = expected_abar({}, 1, 2);
    CHECK_FALSE(e2.is_zero);
    CHECK(e2.magnitude == 2);
    const AbarExpectation e7 = expected_abar({3}, 3, 7);
    CHECK_FALSE(e7.is_zero);
    CHECK(e7.magnitude == 16);
    CHECK_THROWS_AS(expected_abar({2}, 1, 4), std::invalid_argument);  // odd even-count
    CHECK_THROWS_AS(expected_abar({2}, 1, 9), std::invalid_argument);  // dimension
}

TEST_CASE("thm_arf_value dichotomy, exhaustive n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for_each_irreducible(n, [&](const Permutation& p) {
            const CycleData cd = cycle_data(p);
            const AbarExpectation want = expected_abar(cd.lambda, cd.rank, n);
            const long long ab = arf(p).Abar;
            if (want.is_zero)
                REQUIRE(ab == 0);
            else
                REQUIRE((ab == want.magnitude || ab == -want.magnitude));
        });
}

TEST_CASE("size cap enforced") {
    CHECK_THROWS_AS(arf(Permutation::identity(12), 11), std::invalid_argument);
}
