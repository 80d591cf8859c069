#pragma once

#include "rauzy/arf.hpp"
#include "rauzy/cycles.hpp"
#include "rauzy/labelling.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

struct InsertionSpec {
    int count = 1;    // number of consecutive parallel edges
    int top_arc = 1;  // alpha, 1..n
    int bottom_arc = 1;
};

// Insert count parallel edges within the named arcs: new bottoms occupy
// beta+1..beta+count, new tops alpha..alpha+count-1, paired left to right.
Permutation insert_edges(const Permutation& p, const InsertionSpec& spec);

Permutation insert_edges_by_label(const Permutation& p, const ConsistentLabelling& lab, int count,
                                  const Label& top, const Label& bottom);

struct InsertionPrediction {
    bool covered = false;  // false: compute directly (same-part single insertion)
    std::vector<int> lambda;
    int rank = 0;
};

InsertionPrediction predict_one_edge(const CycleData& cd, int alpha, int beta);
InsertionPrediction predict_double_edge(const CycleData& cd, int alpha, int beta);

// The two insertions at consecutive bottom arcs of one even part, with the
// top arc on the other even part; they share a cycle invariant and carry
// opposite signs.
std::pair<Permutation, Permutation> opposite_sign_pair(const Permutation& p, int alpha, int beta,
                                                       int beta_next, int count);

// Cross-permutation attachments. Every call recomputes the cycle invariant
// and throws if it does not match the attachment's predicted change.
Permutation attach_Cp(const Permutation& p, int edge, int param);
Permutation attach_Cpj(const Permutation& p, int edge, int param, int j);
// both params even, p1 > p2; adds cycles {p1+2, p2+2}
Permutation attach_Cp_pair(const Permutation& p, int edge, int p1, int p2);

// X_{p,p'} of size 2+p+p' and X_{p,p',p''} of size 2+p+p'+p''
Permutation base_X(int p1, int p2);
Permutation base_X3(int p1, int p2, int p3);

enum class ExceptionalKind { Id, IdPrime };

Permutation exceptional_id(int n);   // the identity, n >= 1
Permutation exceptional_idp(int n);  // [1, 2, 4, 5, ..., n, 3], n >= 3
InvariantTriple exceptional_invariant(ExceptionalKind kind, int n);

// A standard permutation with sigma(2)=2 realizing the requested invariant,
// shift-irreducible and distinct from both exceptional seeds. The sign is
// certified by subset summation, so n is bounded by sign_cap.
Permutation build_i2x(const std::vector<int>& lambda, int rank, int sign,
                      int sign_cap = kArfDefaultCap);

// (lambda, rank, sign) triples admissible for build_i2x at size n: dimension
// formula, no unit cycles, evenness parity, the sign rule, and for n <= 8 the
// finite table of classes that actually exist (minus the exceptional ones).
std::vector<InvariantTriple> valid_invariants(int n);

} // namespace rauzy
