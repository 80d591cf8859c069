#pragma once

#include "rauzy/perm.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace rauzy {

// Exact rational arithmetic on 64-bit numerator/denominator, overflow-checked.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n) : num(n) {}
    Fraction(long long n, long long d);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num, den); }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    std::string to_string() const;
    static Fraction parse(const std::string& text);  // "p" or "p/q"
};

// An edge on the marks of sigma_{k,l,E'}: bottom mark i (0 and k+1 are the
// corners), rank x within the mark, symmetrically (j, y) on top.
struct MarkedEdge {
    int i = 0, x = 1, j = 0, y = 1;
    bool operator==(const MarkedEdge& o) const {
        return i == o.i && x == o.x && j == o.j && y == o.y;
    }
};

struct MarkedPermutation {
    int k = 0;  // bottom marks
    int l = 0;  // top marks
    std::vector<MarkedEdge> edges;
    std::vector<int> pi_minus;  // permutation of 1..k+1; empty = identity
    std::vector<int> pi_plus;   // permutation of 1..l+1; empty = identity

    void validate() const;  // throws on gaps in within-mark ranks etc.
};

// Q_{e,(i,j)} = 1 iff edge e does not cross a segment from region P_{-,i} to
// region P_{+,j}; combinatorially (i_e < i) <=> (j_e < j), with corner 0 left
// of every region and corner k+1 (l+1) right of every region.
struct QMatrix {
    int k = 0, l = 0;
    std::vector<std::uint32_t> rows;  // bit (i-1)*(l+1)+(j-1), i,j 1-based

    std::vector<int> row_bits(std::size_t e) const;  // 0/1 in (i,j) order
};

QMatrix q_matrix(const MarkedPermutation& m);

enum class Flavor { A, Abar };

inline constexpr int kProverEdgeCap = 20;
inline constexpr int kProverRegionCap = 20;  // (k+1)(l+1)

// A_{k,l,E'}(v) or Abar_{k,l,E'}(v): the signed sum over subsets u of E',
// with v reindexed through pi_minus/pi_plus when present.
long long finite_arf(const MarkedPermutation& m, std::uint32_t v, Flavor flavor);

// finite_arf carrying the host-side crossing correction of the block
// permutations; this is the coefficient of (-1)^{chi_I} (A) respectively
// (-1)^{|I|+chi_I} (Abar) in the subset decomposition of an instantiation.
long long decomposition_term(const MarkedPermutation& m, Flavor flavor, std::uint32_t v);

struct IdentityTerm {
    Fraction coef;
    MarkedPermutation marked;
    std::optional<Flavor> flavor;  // overrides the identity-level flavor
};

struct IdentitySpec {
    int k = 0, l = 0;
    Flavor flavor = Flavor::Abar;
    std::vector<IdentityTerm> terms;

    Flavor term_flavor(std::size_t t) const {
        return terms[t].flavor ? *terms[t].flavor : flavor;
    }
};

struct CheckResult {
    bool holds = false;
    std::uint32_t witness = 0;  // first violating v when !holds
};

// Sum_t K_t * flavor_t(sigma_{k,l,E^t}) = 0 for every host permutation,
// decided through the finite functions on GF(2)^{(k+1)(l+1)}.
CheckResult check_identity(const IdentitySpec& spec);

// Kernel basis of {x : Sum_t x_t * flavor_t(sigma_{k,l,E^t}) = 0 for all
// hosts}, over the rationals.
std::vector<std::vector<Fraction>> solve_coefficients(
    const std::vector<std::pair<MarkedPermutation, Flavor>>& terms);

struct EnumerationBounds {
    int max_terms = 2;
    int max_edges = 2;
    int k = 0;
    int l = 0;
    std::size_t budget = 200000;  // candidate-subset budget; exceeding throws
};

std::vector<IdentitySpec> enumerate_identities(const EnumerationBounds& bounds);

// Concrete permutation hosting E' at the marks. bottom_slots are k strictly
// increasing cut positions in 1..n-1 (mark a sits between host bottoms
// slot_a and slot_a+1), top_slots likewise; host regions are rearranged by
// pi_minus/pi_plus (slot a holds region pi(a)).
Permutation instantiate(const MarkedPermutation& m, const Permutation& host,
                        const std::vector<int>& bottom_slots, const std::vector<int>& top_slots);

// Region-parity vector v(I) of a host edge subset, in the unpermuted region
// indexing used by the decomposition identities.
std::uint32_t region_parity_vector(const MarkedPermutation& m, const Permutation& host,
                                   const std::vector<int>& bottom_slots,
                                   const std::vector<int>& top_slots,
                                   const std::vector<int>& edge_subset);

IdentitySpec parse_identity_spec(std::istream& in);
IdentitySpec parse_identity_spec_text(const std::string& text);
std::string identity_spec_to_json(const IdentitySpec& spec);

} // namespace rauzy
