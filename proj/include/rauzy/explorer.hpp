#pragma once

#include "rauzy/arf.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/tables.hpp"

namespace rauzy {

inline constexpr int kExplorerDefaultCap = 9;

struct ClassInfo {
    Permutation representative;  // lexicographically smallest member
    std::uint64_t size = 0;
    InvariantTriple invariant;
    enum class Tag { None, Id, IdPrime } tag = Tag::None;
    bool contains_unit_cycle = false;  // lambda has a part 1
};

struct ClassReport {
    int n = 0;
    std::vector<ClassInfo> classes;  // ordered by representative
    std::uint64_t irreducible_count = 0;

    // verdicts
    bool invariants_constant = false;       // cycle invariant and Abar constant per class
    bool census_matches_table = false;      // n <= 8 only; vacuously true above
    bool counting_rule_matches = false;     // zero/one/two rule on the carved-out rows
    int carved_out_unit = 0;                // lambda-with-1 classes, reported not judged
    int carved_out_exceptional = 0;

    bool all_verdicts() const {
        return invariants_constant && census_matches_table && counting_rule_matches;
    }
    std::string to_json() const;
    std::string to_table() const;  // "lam|r s" lines mirroring the small-size census
};

// Partition all irreducible permutations of size n into orbits of the two
// operators, with invariants, exceptional tags and table verdicts.
ClassReport enumerate_classes(int n, int cap = kExplorerDefaultCap);

struct VerdictLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

// same-invariant <=> same-class among non-exceptional unit-free classes,
// with the carve-outs reported line by line
std::vector<VerdictLine> verify_classification(int n, int cap = kExplorerDefaultCap);

// even evens and the forced |Abar| for every irreducible permutation
std::vector<VerdictLine> verify_arf_values(int n, int cap = kExplorerDefaultCap);

} // namespace rauzy
