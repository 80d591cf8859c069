#pragma once

#include "rauzy/cycles.hpp"
#include "rauzy/labelling.hpp"
#include "rauzy/perm.hpp"

#include <cstddef>

namespace rauzy {

// Edges are identified by their bottom endpoint; graying whole edges keeps
// the black restriction a permutation.
struct Coloring {
    std::vector<char> gray;  // gray[i-1] != 0 iff edge (i, sigma(i)) is gray

    static Coloring none(int n) { return Coloring{std::vector<char>(static_cast<size_t>(n), 0)}; }
    static Coloring of_edges(int n, const std::vector<int>& bottom_indices);
    int count_gray() const;
};

struct ReducedPair {
    Permutation host;
    Coloring coloring;
    Permutation reduced;
    std::vector<int> bottom_map;  // host bottom i -> reduced position, 0 when gray
    std::vector<int> top_map;     // host top value -> reduced value, 0 when gray

    // Arc placement of each gray edge inside the reduction. bottom_arc = 0 or
    // top_arc = k+1 can only occur when the edge is a pivot (improper state).
    struct GrayPlacement {
        int edge = 0;  // host bottom endpoint
        int top_arc = 0;
        int bottom_arc = 0;
    };
    std::vector<GrayPlacement> gray_arcs;
};

ReducedPair reduce(const Permutation& host, const Coloring& c);

// discard the edge (sigma^{-1}(1), 1) and relabel
Permutation d(const Permutation& p);

struct DPrediction {
    std::vector<int> lambda;  // sorted descending
    int rank = 0;
    PermType type;
};

// invariant of d(sigma) from the invariant and type of a standard sigma
DPrediction predict_d_invariant(std::vector<int> lambda, int rank, const PermType& type);

// the n-1 distinct permutations {L^i(sigma)} of a standard sigma
std::vector<Permutation> standard_family(const Permutation& p);

bool is_shift_irreducible(const Permutation& p);

struct Edge {
    int bottom = 0;
    int top = 0;
    bool operator==(const Edge& o) const { return bottom == o.bottom && top == o.top; }
};

// the two pivot edges (1, sigma(1)) and (sigma^{-1}(n), n)
std::pair<Edge, Edge> pivots(const Permutation& p);

bool is_proper(const Permutation& p, const Coloring& c);

struct BoostResult {
    Permutation host;
    Coloring coloring;
    std::vector<int> alphas;  // repetitions used per input letter

    struct EdgeTrack {
        int edge_before = 0;  // host bottom endpoint at the start
        int edge_after = 0;
        Label top_before, bottom_before;
        Label top_after, bottom_after;
    };
    std::vector<EdgeTrack> tracks;  // one per gray edge
};

// One boosted letter: apply the operator (tracking gray edges, which travel
// with the bottom positions under R) until the pair is proper again. Returns
// the repetition count used.
int boosted_step(Permutation& host, Coloring& c, char op);

// Boosted word: each letter of w (over {L,R}) is repeated until no gray edge
// is a pivot. Requires a proper start with an irreducible reduction. The
// returned tracks carry each gray edge's arc labels in the labelled reduced
// dynamics before and after.
BoostResult boost(const Permutation& host, const Coloring& c, const std::string& w);

struct MonodromyReport {
    std::vector<ConsistentLabelling> reachable;  // labellings reachable at p by loops
    std::size_t labelled_states = 0;             // BFS states visited
    bool matches_generated_group = false;        // reachable == orbit of the generators
    bool generator_status[4] = {false, false, false, false};
    // exchanges / odd 1-shifts / even 2-shifts / even-pair 1-shifts
    bool two_point_matches = false;              // 2-point answers match the case split
};

MonodromyReport monodromy_group(const Permutation& p, const ConsistentLabelling& lab,
                                std::size_t state_limit = 5000000);

} // namespace rauzy
