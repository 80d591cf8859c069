#include "rauzy/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace rauzy {

std::string PermType::to_string() const {
    std::ostringstream out;
    out << (is_H ? 'H' : 'X') << '(' << a << ',' << b << ')';
    return out.str();
}

namespace {

// Traversal successors on arcs. Direction is the one that walks the rank
// path from the top-left endpoint to the bottom-right one.
//   top arc alpha   ->  bottom arc sigma^{-1}(alpha)   (arc n is terminal)
//   bottom arc beta ->  top arc sigma(beta+1)+1, crossing the -1 mark and
//                       resuming at top arc sigma(1)+1 when sigma(beta+1)=n
struct Walker {
    const Permutation& p;
    Permutation pinv;
    explicit Walker(const Permutation& perm) : p(perm), pinv(perm.inverse()) {}

    int bottom_after_top(int alpha) const { return pinv(alpha); }

    // returns top arc, sets crossed when the -1 mark was traversed
    int top_after_bottom(int beta, bool& crossed) const {
        const int j = p(beta + 1);
        if (j < p.size()) {
            crossed = false;
            return j + 1;
        }
        crossed = true;
        return p(1) + 1;
    }
};

} // namespace

CycleData cycle_data(const Permutation& p) {
    if (!is_irreducible(p)) throw std::invalid_argument("cycle_data: reducible permutation");
    const int n = p.size();

    CycleData cd;
    cd.n = n;
    cd.bottom_owner.assign(static_cast<size_t>(n), -2);
    cd.top_owner.assign(static_cast<size_t>(n), -2);

    if (n == 1) {
        // degenerate: rank path is just the two added arcs, the mark sits on
        // an arc-free loop
        cd.rank = 0;
        cd.rank_path.tops = {1};
        cd.rank_path.bottoms = {1};
        cd.bottom_owner[0] = -1;
        cd.top_owner[0] = -1;
        cd.type = PermType{false, 0, 0};
        cd.mark_cycle = -1;
        return cd;
    }

    const Walker w(p);

    // rank path, from the added top arc 1 to the added bottom arc n
    {
        CycleData::Path& path = cd.rank_path;
        int alpha = 1;
        int tops_before_mark = -1;
        for (;;) {
            path.tops.push_back(alpha);
            cd.top_owner[static_cast<size_t>(alpha) - 1] = -1;
            const int beta = w.bottom_after_top(alpha);
            path.bottoms.push_back(beta);
            cd.bottom_owner[static_cast<size_t>(beta) - 1] = -1;
            if (beta == n) break;
            bool crossed = false;
            alpha = w.top_after_bottom(beta, crossed);
            if (crossed) {
                path.through_mark = true;
                tops_before_mark = static_cast<int>(path.tops.size());
            }
        }
        cd.rank = static_cast<int>(path.tops.size()) - 1;
        if (path.through_mark) {
            const int r1 = tops_before_mark;
            const int r2 = static_cast<int>(path.tops.size()) - r1;
            cd.type = PermType{true, r1, r2};
        }
    }

    // closed cycles
    for (int start = 2; start <= n; ++start) {
        if (cd.top_owner[static_cast<size_t>(start) - 1] != -2) continue;
        CycleData::Path cyc;
        const int id = static_cast<int>(cd.cycles.size());
        int alpha = start;
        do {
            cyc.tops.push_back(alpha);
            cd.top_owner[static_cast<size_t>(alpha) - 1] = id;
            const int beta = w.bottom_after_top(alpha);
            cyc.bottoms.push_back(beta);
            cd.bottom_owner[static_cast<size_t>(beta) - 1] = id;
            bool crossed = false;
            alpha = w.top_after_bottom(beta, crossed);
            if (crossed) cyc.through_mark = true;
        } while (alpha != start);
        if (cyc.through_mark) cd.mark_cycle = id;
        cd.cycles.push_back(std::move(cyc));
    }

    for (const auto& c : cd.cycles) cd.lambda.push_back(static_cast<int>(c.tops.size()));
    std::sort(cd.lambda.begin(), cd.lambda.end(), std::greater<int>());

    if (!cd.rank_path.through_mark) {
        const int i = (cd.mark_cycle >= 0)
                          ? static_cast<int>(cd.cycles[static_cast<size_t>(cd.mark_cycle)].tops.size())
                          : 0;
        cd.type = PermType{false, cd.rank, i};
    }

    long long sum = cd.rank;
    for (int x : cd.lambda) sum += x;
    if (sum != n - 1) throw std::logic_error("dimension formula violated in cycle_data");

    return cd;
}

std::pair<std::vector<int>, int> cycle_invariant(const Permutation& p) {
    CycleData cd = cycle_data(p);
    return {std::move(cd.lambda), cd.rank};
}

PermType perm_type(const Permutation& p) { return cycle_data(p).type; }

long long chi(const Permutation& p) {
    const int n = p.size();
    long long c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) < p(j)) ++c;
    return c;
}

long long chi_restricted(const Permutation& p, const std::vector<int>& edges) {
    long long c = 0;
    const size_t m = edges.size();
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            const int i = edges[a], j = edges[b];
            if ((i < j) == (p(i) < p(j))) ++c;
        }
    return c;
}

} // namespace rauzy
