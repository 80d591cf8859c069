#pragma once

#include "rauzy/cycles.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

// Arc label. Rank labels run 0..r per side; a cycle of length len carries
// labels with positions 0..len-1, one alphabet per copy of that length.
struct Label {
    enum class Kind : std::uint8_t { RankBottom, RankTop, CycleBottom, CycleTop };
    Kind kind = Kind::RankBottom;
    int pos = 0;   // rank index, or position within the cycle
    int len = 0;   // cycle length, 0 for rank labels
    int copy = 0;  // copy number j >= 1, 0 for rank labels

    bool operator==(const Label& o) const {
        return kind == o.kind && pos == o.pos && len == o.len && copy == o.copy;
    }
    bool is_rank() const { return len == 0; }
    // "brk[k]" / "trk[k]" / "b[k,li,j]" / "t[k,li,j]"
    std::string to_string() const;
};

struct ConsistentLabelling {
    std::vector<Label> pi_b;  // bottom arc beta -> pi_b[beta-1]
    std::vector<Label> pi_t;

    bool operator==(const ConsistentLabelling& o) const {
        return pi_b == o.pi_b && pi_t == o.pi_t;
    }
    int find_bottom(const Label& l) const;  // arc position carrying l, 0 if absent
    int find_top(const Label& l) const;
    // compact byte key of pi_b, for visited sets
    std::string bottom_key() const;
    // two position -> label arrays: {"pi_b":[...],"pi_t":[...]}
    std::string to_json() const;
};

// beta' = sigma^{-1}(sigma(beta+1)+1), wrapping through sigma^{-1}(sigma(1)+1)
// when sigma(beta+1) = n; defined for 1 <= beta <= n-1
int consecutive_bottom(const Permutation& p, int beta);
// the top analogue, defined when sigma^{-1}(alpha) < n
int consecutive_top(const Permutation& p, int alpha);

// Deterministic consistent labelling: rank labels along the rank path, each
// cycle anchored at its smallest bottom arc, copies of equal length numbered
// by smallest bottom arc.
ConsistentLabelling canonical_labelling(const Permutation& p);

// Unique pi_t completing pi_b (property 3).
std::vector<Label> top_from_bottom(const Permutation& p, const std::vector<Label>& pi_b);

// Reduced criterion: property 2 on bottom arcs, property 3, pi_t(1) = trk[0].
bool verify_consistent(const Permutation& p, const ConsistentLabelling& lab);
// All four defining properties checked independently.
bool verify_consistent_full(const Permutation& p, const ConsistentLabelling& lab);

// Sh^m_{len,copy} and Ex_{len,j1,j2}; both act on the label coordinates of
// the two sides simultaneously.
ConsistentLabelling shift_op(const ConsistentLabelling& lab, int len, int copy, int m);
ConsistentLabelling exchange_op(const ConsistentLabelling& lab, int len, int j1, int j2);

// Labelled dynamics: L acts on pi_t by gamma_t(n, sigma(1)), R on pi_b by
// gamma_b(n, sigma^{-1}(n)).
std::pair<Permutation, ConsistentLabelling> labelled_L(const Permutation& p,
                                                       const ConsistentLabelling& lab);
std::pair<Permutation, ConsistentLabelling> labelled_R(const Permutation& p,
                                                       const ConsistentLabelling& lab);

// |Pi| = prod_i m_i! * lambda_i^{m_i}
unsigned long long count_labellings(const Permutation& p);
std::vector<ConsistentLabelling> enumerate_labellings(const Permutation& p,
                                                      std::size_t cap = 1000000);

} // namespace rauzy
