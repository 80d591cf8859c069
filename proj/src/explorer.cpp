#include "rauzy/explorer.hpp"

#include "rauzy/constructions.hpp"
#include "rauzy/ops.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rauzy {

namespace {

// visited bitset addressed by Lehmer rank; n <= 9 keeps this under 50 KB
struct RankSet {
    std::vector<std::uint64_t> bits;
    explicit RankSet(std::uint64_t size) : bits((size + 63) / 64, 0) {}
    bool test_set(std::uint64_t r) {
        std::uint64_t& w = bits[r >> 6];
        const std::uint64_t m = 1ull << (r & 63);
        if (w & m) return true;
        w |= m;
        return false;
    }
};

} // namespace

ClassReport enumerate_classes(int n, int cap) {
    if (n < 2 || n > cap) throw std::invalid_argument("enumerate_classes: size out of range");

    ClassReport rep;
    rep.n = n;
    RankSet visited(factorial(n));
    const Permutation idp = n >= 3 ? exceptional_idp(n) : Permutation::identity(n);

    for_each_irreducible(n, [&](const Permutation& seed) {
        ++rep.irreducible_count;
        if (visited.test_set(seed.lehmer_rank())) return;

        // BFS the orbit; the seed is the lexicographic minimum of the class
        // because for_each_irreducible runs in lexicographic order
        ClassInfo info;
        info.representative = seed;
        std::queue<Permutation> frontier;
        frontier.push(seed);
        info.size = 1;
        bool has_id = seed == Permutation::identity(n);
        bool has_idp = n >= 3 && seed == idp;
        const auto [lam0, r0] = cycle_invariant(seed);
        const long long abar0 = arf(seed).Abar;
        bool constant = true;
        while (!frontier.empty()) {
            const Permutation x = std::move(frontier.front());
            frontier.pop();
            for (Permutation y : {apply_L(x), apply_R(x)}) {
                if (visited.test_set(y.lehmer_rank())) continue;
                ++info.size;
                has_id = has_id || y == Permutation::identity(n);
                has_idp = has_idp || (n >= 3 && y == idp);
                if (constant) {
                    const auto [lam, r] = cycle_invariant(y);
                    constant = lam == lam0 && r == r0 && arf(y).Abar == abar0;
                }
                frontier.push(std::move(y));
            }
        }
        info.invariant = invariant_triple(seed);
        info.tag = has_id ? ClassInfo::Tag::Id
                          : has_idp ? ClassInfo::Tag::IdPrime : ClassInfo::Tag::None;
        for (int part : info.invariant.lambda) info.contains_unit_cycle |= part == 1;
        rep.classes.push_back(std::move(info));
        if (!constant) throw std::logic_error("enumerate_classes: invariant varies inside a class");
    });
    rep.invariants_constant = true;

    // carve-outs and counting rule
    std::map<std::pair<std::vector<int>, int>, std::vector<const ClassInfo*>> judged;
    for (const ClassInfo& c : rep.classes) {
        if (c.contains_unit_cycle) {
            ++rep.carved_out_unit;
            continue;
        }
        if (c.tag != ClassInfo::Tag::None) {
            ++rep.carved_out_exceptional;
            continue;
        }
        judged[{c.invariant.lambda, c.invariant.rank}].push_back(&c);
    }
    rep.counting_rule_matches = true;
    if (n >= 9) {
        // the asymptotic zero/one/two rule, checked per invariant
        std::map<std::pair<std::vector<int>, int>, int> expected;
        for (const InvariantTriple& v : valid_invariants(n)) ++expected[{v.lambda, v.rank}];
        std::map<std::pair<std::vector<int>, int>, int> got;
        for (const auto& [key, classes] : judged) got[key] = static_cast<int>(classes.size());
        rep.counting_rule_matches = expected == got;
        if (rep.counting_rule_matches)
            for (const auto& [key, classes] : judged) {
                if (classes.size() == 1)
                    rep.counting_rule_matches &= classes[0]->invariant.sign == 0;
                else if (classes.size() == 2)
                    rep.counting_rule_matches &=
                        classes[0]->invariant.sign * classes[1]->invariant.sign == -1;
            }
    } else {
        for (const auto& [key, classes] : judged) {
            int evens = key.second % 2 == 0 ? 1 : 0;
            for (int x : key.first) evens += x % 2 == 0 ? 1 : 0;
            if (evens % 2) rep.counting_rule_matches = false;
            if (evens == 0 && classes.size() == 2)
                rep.counting_rule_matches &=
                    classes[0]->invariant.sign * classes[1]->invariant.sign == -1;
            if (evens > 0)
                for (const ClassInfo* c : classes)
                    rep.counting_rule_matches &= c->invariant.sign == 0;
        }
    }

    // census against the small-size table
    rep.census_matches_table = true;
    if (n >= 4 && n <= 8) {
        std::multiset<std::string> want, got;
        for (const SmallClassRow& row : small_size_table(n)) {
            InvariantTriple t{row.lambda, row.rank, row.sign, n, PermType{}};
            const char tag = row.tag == SmallClassRow::Tag::Id
                                 ? 'I'
                                 : row.tag == SmallClassRow::Tag::IdPrime ? 'P' : '-';
            want.insert(t.short_form() + tag);
        }
        for (const ClassInfo& c : rep.classes) {
            if (c.contains_unit_cycle) continue;
            const char tag = c.tag == ClassInfo::Tag::Id
                                 ? 'I'
                                 : c.tag == ClassInfo::Tag::IdPrime ? 'P' : '-';
            got.insert(c.invariant.short_form() + tag);
        }
        rep.census_matches_table = want == got;
    }

    std::uint64_t total = 0;
    for (const ClassInfo& c : rep.classes) total += c.size;
    if (total != rep.irreducible_count)
        throw std::logic_error("enumerate_classes: class sizes do not sum to the census");
    return rep;
}

std::string ClassReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["irreducible"] = irreducible_count;
    j["classes"] = nlohmann::json::array();
    for (const ClassInfo& c : classes) {
        nlohmann::json jc;
        jc["representative"] = c.representative.to_string();
        jc["size"] = c.size;
        jc["invariant"] = nlohmann::json::parse(c.invariant.to_json());
        jc["tag"] = c.tag == ClassInfo::Tag::Id ? "Id" : c.tag == ClassInfo::Tag::IdPrime ? "Id'" : "";
        jc["has_unit_cycle"] = c.contains_unit_cycle;
        j["classes"].push_back(std::move(jc));
    }
    j["verdicts"] = {{"invariants_constant", invariants_constant},
                     {"census_matches_table", census_matches_table},
                     {"counting_rule_matches", counting_rule_matches},
                     {"carved_out_unit_cycle_classes", carved_out_unit},
                     {"carved_out_exceptional_classes", carved_out_exceptional}};
    return j.dump(2);
}

std::string ClassReport::to_table() const {
    std::ostringstream out;
    out << "n=" << n << "  ";
    auto print_group = [&](ClassInfo::Tag tag) {
        for (const ClassInfo& c : classes)
            if (c.tag == tag && !c.contains_unit_cycle) out << c.invariant.short_form() << ' ';
    };
    print_group(ClassInfo::Tag::Id);
    out << "| ";
    print_group(ClassInfo::Tag::IdPrime);
    out << "| ";
    print_group(ClassInfo::Tag::None);
    return out.str();
}

std::vector<VerdictLine> verify_classification(int n, int cap) {
    const ClassReport rep = enumerate_classes(n, cap);
    std::vector<VerdictLine> out;

    out.push_back({"invariants constant on every class", rep.invariants_constant, ""});

    // same invariant => same class, on the judged rows
    std::map<std::string, int> seen;
    bool unique = true;
    std::string dup;
    for (const ClassInfo& c : rep.classes) {
        if (c.contains_unit_cycle || c.tag != ClassInfo::Tag::None) continue;
        const std::string key = c.invariant.short_form();
        if (++seen[key] > 1) {
            unique = false;
            dup = key;
        }
    }
    out.push_back({"one class per full invariant (unit-free, non-exceptional)", unique, dup});
    out.push_back({"class count per cycle invariant follows the zero/one/two rule",
                   rep.counting_rule_matches, ""});
    if (n >= 4 && n <= 8)
        out.push_back({"census equals the small-size table", rep.census_matches_table, ""});
    out.push_back({"carve-outs reported", true,
                   std::to_string(rep.carved_out_unit) + " unit-cycle, " +
                       std::to_string(rep.carved_out_exceptional) + " exceptional classes"});
    return out;
}

std::vector<VerdictLine> verify_arf_values(int n, int cap) {
    if (n < 2 || n > cap) throw std::invalid_argument("verify_arf_values: size out of range");
    bool parity = true, dichotomy = true;
    std::string bad;
    for_each_irreducible(n, [&](const Permutation& p) {
        if (!parity || !dichotomy) return;
        const CycleData cd = cycle_data(p);
        int evens = cd.rank % 2 == 0 ? 1 : 0;
        for (int x : cd.lambda) evens += x % 2 == 0 ? 1 : 0;
        if (evens % 2) {
            parity = false;
            bad = p.to_string();
            return;
        }
        const long long ab = arf(p).Abar;
        const long long want = 1ll << ((n + cd.num_cycles()) / 2);
        const bool ok = evens > 0 ? ab == 0 : (ab == want || ab == -want);
        if (!ok) {
            dichotomy = false;
            bad = p.to_string();
        }
    });
    return {{"even parts of lambda u {r} are even in number", parity, parity ? "" : bad},
            {"Abar is 0 or +-2^{(n+l)/2} exactly as the invariant dictates", dichotomy,
             dichotomy ? "" : bad}};
}

} // namespace rauzy
