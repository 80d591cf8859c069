// Acceptance suite: one line per criterion, exit 0 only when all pass.

#include "rauzy/arf.hpp"
#include "rauzy/constructions.hpp"
#include "rauzy/dynamics.hpp"
#include "rauzy/explorer.hpp"
#include "rauzy/labelling.hpp"
#include "rauzy/ops.hpp"
#include "rauzy/prover.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace rauzy;

namespace {

int failures = 0;

void criterion(int number, const char* name, bool pass, const std::string& detail = "") {
    std::printf("[%2d] %s  %s%s%s\n", number, pass ? "PASS" : "FAIL", name,
                detail.empty() ? "" : "  — ", detail.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
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

// ---------------------------------------------------------------- 1
void small_size_census() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 8; ++n) {
        const ClassReport rep = enumerate_classes(n);
        if (!(rep.census_matches_table && rep.invariants_constant && rep.counting_rule_matches)) {
            pass = false;
            detail += "n=" + std::to_string(n) + " ";
        }
    }
    criterion(1, "class census at n=4..8 reproduces the small-size table exactly", pass, detail);
}

// ---------------------------------------------------------------- 2
void exceptional_tables() {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 12; ++n) {
        const bool id_ok =
            invariant_triple(exceptional_id(n)) == exceptional_invariant(ExceptionalKind::Id, n);
        const bool idp_ok = invariant_triple(exceptional_idp(n)) ==
                            exceptional_invariant(ExceptionalKind::IdPrime, n);
        if (!(id_ok && idp_ok)) {
            pass = false;
            detail += "n=" + std::to_string(n) + " ";
        }
    }
    criterion(2, "exceptional invariants match the closed table for n=3..12", pass, detail);
}

// ---------------------------------------------------------------- 3
void worked_figures() {
    const auto inv = cycle_invariant(Permutation::parse("4 5 1 2 6 3"));
    const bool fig1 = inv == std::pair<std::vector<int>, int>{{2, 2}, 1};

    const Permutation p = Permutation::parse("2 5 1 4 7 8 3 9 6");
    const long long chi = chi_restricted(p, {1, 2, 6, 8, 9});
    const bool fig2 = chi == 8 && ((5 + chi) % 2 == 1);  // contribution -1

    MarkedPermutation m;
    m.k = 1;
    m.l = 4;
    m.edges = {{0, 1, 0, 1}, {0, 2, 3, 1}, {0, 3, 1, 1}, {1, 1, 4, 1}, {1, 2, 2, 1}};
    const bool fig3 = q_matrix(m).row_bits(4) == std::vector<int>{1, 1, 0, 0, 0, 0, 0, 1, 1, 1};

    criterion(3, "worked figures: cycle invariant, subset term, printed Q row", fig1 && fig2 && fig3);
}

// ---------------------------------------------------------------- 4
void arf_theorem_exhaustive() {
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 9; ++n)
        for (const VerdictLine& v : verify_arf_values(n))
            if (!v.pass) {
                pass = false;
                detail += "n=" + std::to_string(n) + ": " + v.name + "; ";
            }
    criterion(4, "Abar dichotomy and even-evens parity, exhaustive n=2..9", pass, detail);
}

// ---------------------------------------------------------------- 5
void invariance_along_words() {
    std::mt19937 rng(2026);
    bool pass = true;
    for (int trial = 0; trial < 1000 && pass; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        Permutation p = random_irreducible(rng, n);
        const auto inv0 = cycle_invariant(p);
        const long long abar0 = arf(p).Abar;
        for (int step = 0; step < 50; ++step) {
            p = (rng() & 1) ? apply_L(p) : apply_R(p);
            if (cycle_invariant(p) != inv0 || arf(p).Abar != abar0) {
                pass = false;
                break;
            }
        }
    }
    criterion(5, "cycle invariant and Abar constant along 1000 random words of length 50", pass);
}

// ---------------------------------------------------------------- 6
const std::vector<std::string> kFixtures = {
    "dynamics_l_step",           "corner_parallel_edge",
    "corner_parallel_edge_a",    "crossing_edge_kills_abar",
    "crossing_edge_doubles_a",   "consecutive_insertion_sum",
    "consecutive_insertion_sum_crossing", "parallel_block_difference",
    "parallel_block_cubic",      "swapped_blocks_abar",
    "swapped_blocks_a",          "swapped_blocks_sum",
};

IdentitySpec load_fixture(const std::string& name) {
    std::ifstream in(std::filesystem::path(RAUZY_FIXTURE_DIR) / "identities" / (name + ".json"));
    if (!in.good()) throw std::runtime_error("missing fixture " + name);
    return parse_identity_spec(in);
}

void identity_prover() {
    std::mt19937 rng(2027);
    bool pass = true;
    std::string detail;
    for (const std::string& name : kFixtures) {
        IdentitySpec spec = load_fixture(name);
        if (!check_identity(spec).holds) {
            pass = false;
            detail += name + " does not hold; ";
            continue;
        }
        // one perturbed coefficient must fail with a witness
        IdentitySpec bad = spec;
        if (bad.terms.size() == 1) {
            IdentityTerm extra;
            extra.coef = Fraction(1);
            extra.marked.k = bad.k;
            extra.marked.l = bad.l;
            bad.terms.push_back(std::move(extra));
        } else {
            bad.terms[0].coef = bad.terms[0].coef + Fraction(1);
        }
        if (check_identity(bad).holds) {
            pass = false;
            detail += name + " perturbation undetected; ";
            continue;
        }
        // exact brute-force confirmation on 50 random hosts
        for (int done = 0; done < 50;) {
            const int n = std::max(3, std::max(spec.k, spec.l) + 2) + static_cast<int>(rng() % 3);
            if (n > 7) continue;
            std::vector<int> pos(n);
            std::iota(pos.begin(), pos.end(), 1);
            std::shuffle(pos.begin(), pos.end(), rng);
            const Permutation host(pos);
            auto slots = [&](int count) {
                std::vector<int> all(n - 1);
                std::iota(all.begin(), all.end(), 1);
                std::shuffle(all.begin(), all.end(), rng);
                all.resize(static_cast<size_t>(count));
                std::sort(all.begin(), all.end());
                return all;
            };
            const auto bs = slots(spec.k), ts = slots(spec.l);
            Fraction sum(0);
            for (std::size_t t = 0; t < spec.terms.size(); ++t) {
                const ArfPair a = arf(instantiate(spec.terms[t].marked, host, bs, ts));
                sum = sum + spec.terms[t].coef *
                                Fraction(spec.term_flavor(t) == Flavor::A ? a.A : a.Abar);
            }
            if (!sum.is_zero()) {
                pass = false;
                detail += name + " instantiation failed; ";
                break;
            }
            ++done;
        }
    }
    criterion(6, "identity fixtures verified, perturbations refuted, instantiations exact", pass,
              detail);
}

// ---------------------------------------------------------------- 7
void rank_arc_insertions() {
    std::mt19937 rng(2028);
    bool pass = true;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);  // result size n+1 <= 8
        const Permutation tau = random_irreducible(rng, n);
        const ConsistentLabelling lab = canonical_labelling(tau);
        const int r = cycle_data(tau).rank;
        const long long abar_tau = arf(tau).Abar;
        for (int i = 0; i <= r; ++i) {
            const Permutation q = insert_edges_by_label(
                tau, lab, 1, Label{Label::Kind::RankTop, 0, 0, 0},
                Label{Label::Kind::RankBottom, r - i, 0, 0});
            const long long want = (i % 2 == 0) ? 0 : 2 * abar_tau;
            if (arf(q).Abar != want) {
                pass = false;
                break;
            }
        }
    }
    criterion(7, "rank-arc insertion kills or doubles Abar by the parity of the arc offset", pass);
}

// ---------------------------------------------------------------- 8
void insertion_predictors() {
    std::mt19937 rng(2029);
    bool pass = true;
    int covered1 = 0, covered2 = 0;
    while ((covered1 < 2000 || covered2 < 2000) && pass) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Permutation p = random_irreducible(rng, n);
        const CycleData cd = cycle_data(p);
        const int alpha = 1 + static_cast<int>(rng() % n);
        const int beta = 1 + static_cast<int>(rng() % n);
        if (covered1 < 2000) {
            const InsertionPrediction pred = predict_one_edge(cd, alpha, beta);
            if (pred.covered) {
                const Permutation q = insert_edges(p, InsertionSpec{1, alpha, beta});
                if (is_irreducible(q)) {
                    ++covered1;
                    const auto [lam, r] = cycle_invariant(q);
                    pass = pass && lam == pred.lambda && r == pred.rank;
                }
            }
        }
        if (covered2 < 2000 && pass) {
            const InsertionPrediction pred = predict_double_edge(cd, alpha, beta);
            const Permutation q = insert_edges(p, InsertionSpec{2, alpha, beta});
            if (pred.covered && is_irreducible(q)) {
                ++covered2;
                const auto [lam, r] = cycle_invariant(q);
                pass = pass && lam == pred.lambda && r == pred.rank;
            }
        }
    }
    criterion(8, "one- and double-edge predictors match direct invariants on 2000 cases each", pass);
}

// ---------------------------------------------------------------- 9
void labelling_counts() {
    bool pass = true;
    for (int n = 2; n <= 7 && pass; ++n)
        for_each_irreducible(n, [&](const Permutation& p) {
            if (!pass) return;
            const auto all = enumerate_labellings(p);
            if (all.size() != count_labellings(p)) {
                pass = false;
                return;
            }
            for (const auto& lab : all)
                if (!verify_consistent(p, lab)) {
                    pass = false;
                    return;
                }
        });
    criterion(9, "labelling enumeration equals the product formula, exhaustive n<=7", pass);
}

// ---------------------------------------------------------------- 10
// label -> label transform carrying lab0 to lab, composed in label space
std::map<std::string, Label> transform_of(const ConsistentLabelling& from,
                                          const ConsistentLabelling& to) {
    std::map<std::string, Label> t;
    for (std::size_t i = 0; i < from.pi_b.size(); ++i)
        t[from.pi_b[i].to_string()] = to.pi_b[i];
    return t;
}

void monodromy_theorem() {
    bool pass = true;
    int carved = 0;
    std::string detail;
    for (int n = 3; n <= 7; ++n) {
        const ClassReport rep = enumerate_classes(n);
        for (const ClassInfo& cls : rep.classes) {
            const Permutation& p = cls.representative;
            const ConsistentLabelling lab0 = canonical_labelling(p);
            const MonodromyReport mono = monodromy_group(p, lab0);

            // the reachable set is a group under label composition
            std::set<std::string> keys;
            for (const auto& l : mono.reachable) keys.insert(l.bottom_key());
            bool closed = true;
            for (const auto& l1 : mono.reachable)
                for (const auto& l2 : mono.reachable) {
                    const auto t = transform_of(lab0, l1);
                    ConsistentLabelling composed = l2;
                    for (Label& x : composed.pi_b) x = t.at(x.to_string());
                    composed.pi_t = top_from_bottom(p, composed.pi_b);
                    if (!keys.count(composed.bottom_key())) closed = false;
                }
            if (!closed) {
                pass = false;
                detail += "closure fails at " + p.to_string() + "; ";
            }

            const bool in_scope = cls.tag == ClassInfo::Tag::None && !cls.contains_unit_cycle;
            if (in_scope) {
                if (!(mono.matches_generated_group && mono.two_point_matches)) {
                    pass = false;
                    detail += "mismatch at " + p.to_string() + "; ";
                }
            } else if (!mono.matches_generated_group || !mono.two_point_matches) {
                ++carved;  // exceptional / unit-cycle deviation, reported below
            }
        }
    }
    criterion(10,
              "monodromy equals the four generator families and the 2-point case split "
              "(unit-free non-exceptional classes, n<=7)",
              pass,
              detail + std::to_string(carved) + " carved-out class(es) deviate as documented");
}

// ---------------------------------------------------------------- 11
void builder_all_invariants() {
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 10; ++n)
        for (const InvariantTriple& v : valid_invariants(n)) {
            try {
                const Permutation q = build_i2x(v.lambda, v.rank, v.sign);
                const InvariantTriple got = invariant_triple(q);
                const bool ok = got.lambda == v.lambda && got.rank == v.rank &&
                                got.sign == v.sign && is_shift_irreducible(q) &&
                                q != exceptional_id(n) && q != exceptional_idp(n);
                if (!ok) {
                    pass = false;
                    detail += v.short_form() + "@" + std::to_string(n) + " postcondition; ";
                }
            } catch (const std::exception& e) {
                pass = false;
                detail += v.short_form() + "@" + std::to_string(n) + ": " + e.what() + "; ";
            }
        }
    criterion(11, "builder succeeds with full postconditions for every valid invariant, n<=10",
              pass, detail);
}

// ---------------------------------------------------------------- 12
void boosted_dynamics_exhaustive() {
    bool pass = true;
    long long checked = 0;

    // depth-first over all words of length <= 6, sharing prefixes
    struct Node {
        Permutation host;
        Coloring col;
        Permutation tau;
        ConsistentLabelling lab;
    };
    std::function<void(const Node&, int, const Label&, const Label&)> dfs =
        [&](const Node& node, int depth, const Label& top0, const Label& bottom0) {
            if (!pass || depth == 6) return;
            for (const char op : {'L', 'R'}) {
                Node next = node;
                boosted_step(next.host, next.col, op);
                auto stepped = op == 'L' ? labelled_L(node.tau, node.lab)
                                         : labelled_R(node.tau, node.lab);
                next.tau = std::move(stepped.first);
                next.lab = std::move(stepped.second);
                const ReducedPair rp = reduce(next.host, next.col);
                ++checked;
                if (!(rp.reduced == next.tau)) {
                    pass = false;
                    return;
                }
                const auto& g = rp.gray_arcs.at(0);
                const Label t = next.lab.pi_t[static_cast<size_t>(g.top_arc) - 1];
                const Label b = next.lab.pi_b[static_cast<size_t>(g.bottom_arc) - 1];
                if (!(t == top0 && b == bottom0)) {
                    pass = false;
                    return;
                }
                dfs(next, depth + 1, top0, bottom0);
            }
        };

    for (int n = 3; n <= 7 && pass; ++n)
        for_each_irreducible(n, [&](const Permutation& host) {
            if (!pass) return;
            for (int e = 1; e <= n; ++e) {
                const Coloring c = Coloring::of_edges(n, {e});
                if (!is_proper(host, c)) continue;
                const ReducedPair rp = reduce(host, c);
                if (!is_irreducible(rp.reduced)) continue;
                Node root{host, c, rp.reduced, canonical_labelling(rp.reduced)};
                const auto& g = rp.gray_arcs.at(0);
                const Label t0 = root.lab.pi_t[static_cast<size_t>(g.top_arc) - 1];
                const Label b0 = root.lab.pi_b[static_cast<size_t>(g.bottom_arc) - 1];
                dfs(root, 0, t0, b0);
                if (!pass) return;
            }
        });
    criterion(12,
              "commuting square and gray-edge label transport, exhaustive n<=7, words <= 6",
              pass, std::to_string(checked) + " boosted steps checked");
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    small_size_census();
    exceptional_tables();
    worked_figures();
    arf_theorem_exhaustive();
    invariance_along_words();
    identity_prover();
    rank_arc_insertions();
    insertion_predictors();
    labelling_counts();
    monodromy_theorem();
    builder_all_invariants();
    boosted_dynamics_exhaustive();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::printf("RESULT: %d/12 criteria pass (%llds)\n", 12 - failures,
                static_cast<long long>(secs));
    return failures == 0 ? 0 : 1;
}
