#pragma once

#include "rauzy/perm.hpp"

namespace rauzy {

// Type of a permutation: X(r,i) when the -1 mark lies on a cycle (the
// principal cycle, of length i), H(r1,r2) when it lies on the rank path.
struct PermType {
    bool is_H = false;
    int a = 0;  // X: rank r,  H: r1
    int b = 0;  // X: principal-cycle length i,  H: r2
    std::string to_string() const;
    bool operator==(const PermType& o) const { return is_H == o.is_H && a == o.a && b == o.b; }
};

// Full arc structure from the doubled-endpoint construction. Top and bottom
// arcs are numbered 1..n left to right; top arc 1 is the added leftmost arc,
// bottom arc n the added rightmost one. Path lengths count top arcs; the -1
// mark counts for nothing.
struct CycleData {
    struct Path {
        std::vector<int> tops;     // in traversal order
        std::vector<int> bottoms;  // tops[k] is followed by bottoms[k]
        bool through_mark = false;
    };

    int n = 0;
    std::vector<int> lambda;  // cycle lengths, sorted descending
    int rank = 0;
    PermType type;
    Path rank_path;            // rank_path.tops.front() == 1, bottoms.back() == n
    std::vector<Path> cycles;
    int mark_cycle = -1;       // index into cycles, -1 when the rank path owns the mark

    // per-arc ownership: -1 = rank path, otherwise index into cycles
    std::vector<int> bottom_owner;  // [beta-1]
    std::vector<int> top_owner;     // [alpha-1]

    int num_cycles() const { return static_cast<int>(cycles.size()); }
};

CycleData cycle_data(const Permutation& p);

// (lambda sorted descending, rank)
std::pair<std::vector<int>, int> cycle_invariant(const Permutation& p);

PermType perm_type(const Permutation& p);

// number of non-crossing pairs of edges
long long chi(const Permutation& p);

// chi of the sub-permutation on the 1-based edge subset I (edges indexed by
// bottom endpoint)
long long chi_restricted(const Permutation& p, const std::vector<int>& edges);

} // namespace rauzy
