#include <doctest.h>

#include "rauzy/arf.hpp"
#include "rauzy/constructions.hpp"
#include "rauzy/dynamics.hpp"
#include "rauzy/ops.hpp"

#include <numeric>
#include <random>
#include <set>
#include <tuple>

using namespace rauzy;

namespace {

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

TEST_CASE("insert_edges size and bijectivity") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Permutation p = random_irreducible(rng, n);
        const int count = 1 + static_cast<int>(rng() % 3);
        const InsertionSpec spec{count, 1 + static_cast<int>(rng() % n),
                                 1 + static_cast<int>(rng() % n)};
        const Permutation q = insert_edges(p, spec);  // constructor validates bijectivity
        CHECK(q.size() == n + count);
    }
    CHECK_THROWS_AS(insert_edges(Permutation::parse("1 2"), InsertionSpec{1, 3, 1}),
                    std::invalid_argument);
}

TEST_CASE("one-edge predictor matches direct computation on covered cases") {
    std::mt19937 rng(71);
    int covered = 0;
    while (covered < 2000) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Permutation p = random_irreducible(rng, n);
        const CycleData cd = cycle_data(p);
        const int alpha = 1 + static_cast<int>(rng() % n);
        const int beta = 1 + static_cast<int>(rng() % n);
        const InsertionPrediction pred = predict_one_edge(cd, alpha, beta);
        if (!pred.covered) continue;
        const Permutation q = insert_edges(p, InsertionSpec{1, alpha, beta});
        if (!is_irreducible(q)) continue;
        ++covered;
        const auto [lam, r] = cycle_invariant(q);
        REQUIRE(lam == pred.lambda);
        REQUIRE(r == pred.rank);
    }
}

TEST_CASE("double-edge predictor matches direct computation everywhere") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Permutation p = random_irreducible(rng, n);
        const CycleData cd = cycle_data(p);
        const int alpha = 1 + static_cast<int>(rng() % n);
        const int beta = 1 + static_cast<int>(rng() % n);
        const InsertionPrediction pred = predict_double_edge(cd, alpha, beta);
        REQUIRE(pred.covered);
        const Permutation q = insert_edges(p, InsertionSpec{2, alpha, beta});
        if (!is_irreducible(q)) continue;  // corner insertions may disconnect
        const auto [lam, r] = cycle_invariant(q);
        REQUIRE(lam == pred.lambda);
        REQUIRE(r == pred.rank);
    }
}

TEST_CASE("insert_edges_by_label realizes the rank-arc identity of R") {
    // for a standard sigma of type X(r,i): R(sigma) = d(sigma) with one edge
    // at (trk[0], brk[i-1])
    for (int n = 4; n <= 8; ++n)
        for_each_irreducible(n, [&](const Permutation& p) {
            if (p(1) != 1) return;
            const PermType t = perm_type(p);
            if (t.is_H) return;
            const Permutation tau = d(p);
            if (!is_irreducible(tau)) return;
            const ConsistentLabelling lab = canonical_labelling(tau);
            const Permutation built =
                insert_edges_by_label(tau, lab, 1, Label{Label::Kind::RankTop, 0, 0, 0},
                                      Label{Label::Kind::RankBottom, t.b - 1, 0, 0});
            REQUIRE(built == apply_R(p));
        });
}

TEST_CASE("opposite_sign_pair yields equal invariants and opposite Abar") {
    // hosts with exactly two even cycles, built explicitly
    for (int k = 1; k <= 3; ++k) {
        const Permutation host = base_X(1, 4 * k - 1);  // ({2k,2k}, 1)
        const CycleData cd = cycle_data(host);
        REQUIRE(cd.num_cycles() == 2);
        const auto& c0 = cd.cycles[0];
        const auto& c1 = cd.cycles[1];
        const int alpha = c0.tops.front();
        const int beta = c1.bottoms.front();
        const int beta2 = consecutive_bottom(host, beta);
        for (int count = 1; count <= 3; ++count) {
            const auto [a, b] = opposite_sign_pair(host, alpha, beta, beta2, count);
            REQUIRE(cycle_invariant(a) == cycle_invariant(b));
            const long long aa = arf(a).Abar, bb = arf(b).Abar;
            REQUIRE(aa == -bb);
            REQUIRE(aa != 0);
        }
    }
    CHECK_THROWS_AS(opposite_sign_pair(Permutation::parse("1 2 3"), 2, 2, 3, 1),
                    std::invalid_argument);
}

TEST_CASE("attach_Cp postcondition table, p <= 12 on random hosts") {
    std::mt19937 rng(79);
    for (int p = 0; p <= 12; ++p)
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const Permutation host = random_irreducible(rng, n);
            const int edge = 1 + static_cast<int>(rng() % n);
            const Permutation got = attach_Cp(host, edge, p);  // self-checking
            CHECK(got.size() == n + p + 1);
        }
}

TEST_CASE("attach_Cp examples") {
    const Permutation host = Permutation::parse("2 4 1 3");
    const auto [lam0, r0] = cycle_invariant(host);
    const auto [lam1, r1] = cycle_invariant(attach_Cp(host, 2, 0));
    std::vector<int> want = lam0;
    want.push_back(1);
    std::sort(want.begin(), want.end(), std::greater<int>());
    CHECK(lam1 == want);
    CHECK(r1 == r0);
    const auto [lam2, r2] = cycle_invariant(attach_Cp(host, 2, 5));
    want = lam0;
    want.push_back(3);
    want.push_back(3);
    std::sort(want.begin(), want.end(), std::greater<int>());
    CHECK(lam2 == want);
}

TEST_CASE("twin attachments carry opposite signs") {
    const Permutation host = Permutation::parse("1 2 3");
    for (int p : {4, 5, 6, 8, 9, 10}) {
        const int j = p % 4 + 1;
        const Permutation a = attach_Cp(host, 3, p);
        const Permutation b = attach_Cpj(host, 3, p - j, j);
        REQUIRE(cycle_invariant(a) == cycle_invariant(b));
        if (a.size() <= 16) {
            const long long aa = arf(a).Abar, bb = arf(b).Abar;
            REQUIRE(aa == -bb);
            REQUIRE(aa != 0);
        }
    }
}

TEST_CASE("attach_Cp_pair adds the two even cycles") {
    std::mt19937 rng(83);
    for (auto [p1, p2] : {std::pair{2, 0}, {4, 0}, {4, 2}, {6, 2}, {6, 4}})
        for (int trial = 0; trial < 5; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const Permutation host = random_irreducible(rng, n);
            const int edge = 1 + static_cast<int>(rng() % n);
            attach_Cp_pair(host, edge, p1, p2);  // self-checking
        }
    CHECK_THROWS_AS(attach_Cp_pair(Permutation::parse("1 2"), 1, 2, 2), std::invalid_argument);
}

TEST_CASE("X family fixtures") {
    CHECK(base_X(1, 2) == Permutation::parse("1 2 4 5 3"));
    CHECK(base_X3(2, 1, 2) == Permutation::parse("1 2 6 7 5 3 4"));
    CHECK(base_X3(2, 3, 2) == Permutation::parse("1 2 8 9 5 6 7 3 4"));
    CHECK(cycle_invariant(base_X3(2, 3, 2)) == std::pair<std::vector<int>, int>{{4}, 4});
}

TEST_CASE("X family invariants, k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(cycle_invariant(base_X(1, 2 * k)) ==
              std::pair<std::vector<int>, int>{{2 * k + 1}, 1});
        CHECK(cycle_invariant(base_X(2, 2 * k)) == std::pair<std::vector<int>, int>{{}, 2 * k + 3});
        CHECK(cycle_invariant(base_X(1, 4 * k + 3)) ==
              std::pair<std::vector<int>, int>{{2 * k + 2, 2 * k + 2}, 1});
        CHECK(cycle_invariant(base_X3(2, 1, 2 * k)) ==
              std::pair<std::vector<int>, int>{{2 * k + 1}, 3});
        CHECK(cycle_invariant(base_X3(2, 1, 4 * k + 3)) ==
              std::pair<std::vector<int>, int>{{2 * k + 2, 2 * k + 2}, 3});
        CHECK(cycle_invariant(base_X(2, 4 * k + 3)) ==
              std::pair<std::vector<int>, int>{{2 * k + 2}, 2 * k + 4});
        CHECK(cycle_invariant(base_X(2 * k + 1, 2 * k)) ==
              std::pair<std::vector<int>, int>{{3 * k + 1}, k + 1});
        CHECK(cycle_invariant(base_X(2 * k, 2 * k + 1)) ==
              std::pair<std::vector<int>, int>{{k + 1}, 3 * k + 1});
        CHECK(cycle_invariant(base_X3(2 * k, 3, 2 * k)) ==
              std::pair<std::vector<int>, int>{{2 * k + 2}, 2 * k + 2});
        CHECK(cycle_invariant(base_X3(3, 2 * k, 3)) ==
              std::pair<std::vector<int>, int>{{2 * k + 3, 2}, 2});
    }
}

TEST_CASE("exceptional fixtures match the closed-form table, 3 <= n <= 12") {
    for (int n = 3; n <= 12; ++n) {
        CHECK(invariant_triple(exceptional_id(n)) ==
              exceptional_invariant(ExceptionalKind::Id, n));
        CHECK(invariant_triple(exceptional_idp(n)) ==
              exceptional_invariant(ExceptionalKind::IdPrime, n));
    }
    CHECK(invariant_triple(exceptional_id(7)).short_form() == "3|3+");
    CHECK(invariant_triple(exceptional_idp(6)).short_form() == "22|1");
    CHECK_THROWS_AS(exceptional_idp(2), std::invalid_argument);
}

TEST_CASE("exceptional seeds are the unique standard sigma(2)=2 class members") {
    // pro_excep_std at desk scale, by walking the two orbits
    for (int n = 5; n <= 7; ++n) {
        for (ExceptionalKind kind : {ExceptionalKind::Id, ExceptionalKind::IdPrime}) {
            const Permutation seed =
                kind == ExceptionalKind::Id ? exceptional_id(n) : exceptional_idp(n);
            std::set<Permutation> orbit{seed};
            std::vector<Permutation> stack{seed};
            while (!stack.empty()) {
                Permutation x = stack.back();
                stack.pop_back();
                for (Permutation y : {apply_L(x), apply_R(x)})
                    if (orbit.insert(y).second) stack.push_back(y);
            }
            int with_head = 0;
            for (const Permutation& m : orbit)
                if (m(1) == 1 && m(2) == 2) ++with_head;
            CHECK(with_head == 1);
        }
    }
}

TEST_CASE("build_i2x satisfies all postconditions for every valid invariant, n <= 10") {
    for (int n = 2; n <= 10; ++n)
        for (const InvariantTriple& v : valid_invariants(n)) {
            const Permutation q = build_i2x(v.lambda, v.rank, v.sign);
            const InvariantTriple got = invariant_triple(q);
            REQUIRE(got.lambda == v.lambda);
            REQUIRE(got.rank == v.rank);
            REQUIRE(got.sign == v.sign);
            REQUIRE(q(1) == 1);
            REQUIRE(q(2) == 2);
            REQUIRE(is_shift_irreducible(q));
            REQUIRE(q != exceptional_id(n));
            REQUIRE(q != exceptional_idp(n));
        }
}

TEST_CASE("build_i2x handles selected larger invariants constructively") {
    for (auto [lam, r, s] :
         std::vector<std::tuple<std::vector<int>, int, int>>{{{5, 3}, 3, 1},
                                                             {{5, 3}, 3, -1},
                                                             {{4, 2}, 5, 0},
                                                             {{7, 2}, 2, 0},
                                                             {{3, 3, 3}, 1, 1},
                                                             {{6, 4}, 1, 0},
                                                             {{}, 11, -1},
                                                             {{10}, 2, 0}}) {
        const Permutation q = build_i2x(lam, r, s);
        const InvariantTriple got = invariant_triple(q);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        REQUIRE(got.lambda == lam);
        REQUIRE(got.rank == r);
        REQUIRE(got.sign == s);
        REQUIRE(is_shift_irreducible(q));
    }
}

TEST_CASE("build_i2x rejects invalid requests") {
    CHECK_THROWS_AS(build_i2x({1, 2}, 2, 0), std::invalid_argument);   // unit cycle
    CHECK_THROWS_AS(build_i2x({2}, 2, 0), std::invalid_argument);      // exceptional-only row
    CHECK_THROWS_AS(build_i2x({3}, 1, 1), std::invalid_argument);      // no such class at n=5
    CHECK_THROWS_AS(build_i2x({2}, 1, 0), std::invalid_argument);      // odd even-count
    CHECK_THROWS_AS(build_i2x({3}, 3, 0), std::invalid_argument);      // sign rule
    CHECK_THROWS_AS(build_i2x({25}, 2, 0), std::invalid_argument);     // over the sign cap
}

TEST_CASE("members of an I2X family pass is_shift_irreducible") {
    const Permutation q = build_i2x({3}, 3, -1);
    CHECK(is_shift_irreducible(q));
}
