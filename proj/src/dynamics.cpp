#include "rauzy/dynamics.hpp"

#include "rauzy/ops.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace rauzy {

Coloring Coloring::of_edges(int n, const std::vector<int>& bottom_indices) {
    Coloring c = none(n);
    for (int i : bottom_indices) {
        if (i < 1 || i > n) throw std::invalid_argument("coloring: edge out of range");
        c.gray[static_cast<size_t>(i) - 1] = 1;
    }
    return c;
}

int Coloring::count_gray() const {
    int k = 0;
    for (char g : gray) k += g ? 1 : 0;
    return k;
}

ReducedPair reduce(const Permutation& host, const Coloring& c) {
    const int n = host.size();
    if (static_cast<int>(c.gray.size()) != n) throw std::invalid_argument("reduce: size mismatch");
    const int k = n - c.count_gray();
    if (k == 0) throw std::invalid_argument("reduce: all edges gray");

    ReducedPair rp;
    rp.host = host;
    rp.coloring = c;
    rp.bottom_map.assign(static_cast<size_t>(n) + 1, 0);
    rp.top_map.assign(static_cast<size_t>(n) + 1, 0);

    int next = 0;
    for (int i = 1; i <= n; ++i)
        if (!c.gray[static_cast<size_t>(i) - 1]) rp.bottom_map[static_cast<size_t>(i)] = ++next;
    next = 0;
    std::vector<char> top_gray(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        if (c.gray[static_cast<size_t>(i) - 1]) top_gray[static_cast<size_t>(host(i))] = 1;
    for (int v = 1; v <= n; ++v)
        if (!top_gray[static_cast<size_t>(v)]) rp.top_map[static_cast<size_t>(v)] = ++next;

    std::vector<int> images(static_cast<size_t>(k));
    for (int i = 1; i <= n; ++i)
        if (!c.gray[static_cast<size_t>(i) - 1])
            images[static_cast<size_t>(rp.bottom_map[static_cast<size_t>(i)]) - 1] =
                rp.top_map[static_cast<size_t>(host(i))];
    rp.reduced = Permutation(std::move(images));

    for (int i = 1; i <= n; ++i) {
        if (!c.gray[static_cast<size_t>(i) - 1]) continue;
        ReducedPair::GrayPlacement g;
        g.edge = i;
        int blacks_left = 0;
        for (int j = 1; j < i; ++j)
            if (!c.gray[static_cast<size_t>(j) - 1]) ++blacks_left;
        g.bottom_arc = blacks_left;  // 0 = left of every black edge
        const int t = host(i);
        int blacks_below = 0;
        for (int v = 1; v < t; ++v)
            if (!top_gray[static_cast<size_t>(v)]) ++blacks_below;
        g.top_arc = blacks_below + 1;  // k+1 = right of every black top
        rp.gray_arcs.push_back(g);
    }
    return rp;
}

Permutation d(const Permutation& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("d: size must be at least 2");
    const int drop = p.inverse_at(1);
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n) - 1);
    for (int i = 1; i <= n; ++i)
        if (i != drop) v.push_back(p(i) - 1);
    return Permutation(std::move(v));
}

DPrediction predict_d_invariant(std::vector<int> lambda, int rank, const PermType& type) {
    DPrediction out;
    if (!type.is_H) {
        const int i = type.b;
        auto it = std::find(lambda.begin(), lambda.end(), i);
        if (it == lambda.end()) throw std::invalid_argument("predict_d_invariant: i not in lambda");
        lambda.erase(it);
        out.lambda = std::move(lambda);
        out.rank = rank + i - 1;
        out.type = PermType{true, i, rank};
    } else {
        const int r1 = type.a, r2 = type.b;
        if (r1 >= 2) lambda.push_back(r1 - 1);  // a 0-length part never materializes
        out.lambda = std::move(lambda);
        out.rank = r2 - 1;
        out.type = PermType{false, r2 - 1, r1 - 1};
    }
    std::sort(out.lambda.begin(), out.lambda.end(), std::greater<int>());
    return out;
}

std::vector<Permutation> standard_family(const Permutation& p) {
    if (p(1) != 1) throw std::invalid_argument("standard_family: sigma(1) != 1");
    const int n = p.size();
    std::vector<Permutation> fam;
    Permutation q = p;
    for (int i = 0; i <= n - 2; ++i) {
        fam.push_back(q);
        q = apply_L(q);
    }
    return fam;
}

bool is_shift_irreducible(const Permutation& p) {
    if (p(1) != 1) throw std::invalid_argument("is_shift_irreducible: sigma(1) != 1");
    const int n = p.size();
    if (n < 3) return true;
    // indices are modulo the family period n-1
    const int skip1 = (n - p(2)) % (n - 1);
    const int skip2 = (n - p(n) + 1) % (n - 1);
    Permutation q = p;
    for (int i = 0; i <= n - 2; ++i) {
        if (i != skip1 && i != skip2 && !is_irreducible(d(q))) return false;
        q = apply_L(q);
    }
    return true;
}

std::pair<Edge, Edge> pivots(const Permutation& p) {
    return {Edge{1, p(1)}, Edge{p.inverse_at(p.size()), p.size()}};
}

bool is_proper(const Permutation& p, const Coloring& c) {
    const auto [left, right] = pivots(p);
    return !c.gray[static_cast<size_t>(left.bottom) - 1] &&
           !c.gray[static_cast<size_t>(right.bottom) - 1];
}

namespace {

// one operator step on (host, per-edge payload); payload follows the edges
struct ColoredState {
    Permutation host;
    std::vector<int> tag;  // [i-1]: -1 black, else gray edge id

    void step(char op) {
        const int n = host.size();
        if (op == 'L') {
            host = apply_L(host);
            return;
        }
        const Permutation g = gamma_b(n, host.inverse_at(n));
        std::vector<int> tag2(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) tag2[static_cast<size_t>(j) - 1] = tag[static_cast<size_t>(g(j)) - 1];
        tag = std::move(tag2);
        host = apply_R(host);
    }

    Coloring coloring() const {
        Coloring c = Coloring::none(host.size());
        for (size_t i = 0; i < tag.size(); ++i) c.gray[i] = tag[i] >= 0 ? 1 : 0;
        return c;
    }
};

} // namespace

int boosted_step(Permutation& host, Coloring& c, char op) {
    if (op != 'L' && op != 'R') throw std::invalid_argument("boosted_step: op must be L or R");
    int alpha = 0;
    do {
        if (op == 'L') {
            host = apply_L(host);
        } else {
            const Permutation g = gamma_b(host.size(), host.inverse_at(host.size()));
            std::vector<char> gray2(c.gray.size());
            for (int j = 1; j <= host.size(); ++j)
                gray2[static_cast<size_t>(j) - 1] = c.gray[static_cast<size_t>(g(j)) - 1];
            c.gray = std::move(gray2);
            host = apply_R(host);
        }
        ++alpha;
    } while (!is_proper(host, c));
    return alpha;
}

BoostResult boost(const Permutation& host, const Coloring& c, const std::string& w) {
    for (char ch : w)
        if (ch != 'L' && ch != 'R') throw std::invalid_argument("boost: word letters must be L or R");
    if (!is_proper(host, c)) throw std::invalid_argument("boost: improper start");

    const ReducedPair rp0 = reduce(host, c);
    if (!is_irreducible(rp0.reduced)) throw std::invalid_argument("boost: reducible reduction");

    ColoredState st;
    st.host = host;
    st.tag.assign(static_cast<size_t>(host.size()), -1);
    int next_id = 0;
    for (int i = 1; i <= host.size(); ++i)
        if (c.gray[static_cast<size_t>(i) - 1]) st.tag[static_cast<size_t>(i) - 1] = next_id++;

    Permutation tau = rp0.reduced;
    ConsistentLabelling lab = canonical_labelling(tau);

    BoostResult out;
    out.tracks.resize(static_cast<size_t>(next_id));
    for (const auto& g : rp0.gray_arcs) {
        const int id = st.tag[static_cast<size_t>(g.edge) - 1];
        auto& tr = out.tracks[static_cast<size_t>(id)];
        tr.edge_before = g.edge;
        tr.top_before = lab.pi_t[static_cast<size_t>(g.top_arc) - 1];
        tr.bottom_before = lab.pi_b[static_cast<size_t>(g.bottom_arc) - 1];
    }

    for (char ch : w) {
        auto next = (ch == 'L') ? labelled_L(tau, lab) : labelled_R(tau, lab);
        tau = std::move(next.first);
        lab = std::move(next.second);
        int alpha = 0;
        do {
            st.step(ch);
            ++alpha;
        } while (!is_proper(st.host, st.coloring()));
        out.alphas.push_back(alpha);
        if (!(reduce(st.host, st.coloring()).reduced == tau))
            throw std::logic_error("boost: commuting square failed");
    }

    out.host = st.host;
    out.coloring = st.coloring();
    const ReducedPair rp1 = reduce(out.host, out.coloring);
    for (const auto& g : rp1.gray_arcs) {
        const int id = st.tag[static_cast<size_t>(g.edge) - 1];
        auto& tr = out.tracks[static_cast<size_t>(id)];
        tr.edge_after = g.edge;
        tr.top_after = lab.pi_t[static_cast<size_t>(g.top_arc) - 1];
        tr.bottom_after = lab.pi_b[static_cast<size_t>(g.bottom_arc) - 1];
    }
    return out;
}

namespace {

std::vector<ConsistentLabelling> generated_labellings(const Permutation& p,
                                                      const ConsistentLabelling& start,
                                                      std::vector<std::pair<int, std::string>>& gen_images) {
    const CycleData cd = cycle_data(p);
    std::map<int, int> mult;
    for (int len : cd.lambda) ++mult[len];

    struct Gen {
        int family;
        std::function<ConsistentLabelling(const ConsistentLabelling&)> apply;
    };
    std::vector<Gen> gens;
    std::vector<std::pair<int, int>> even_copies;  // (len, copy)
    for (const auto& [len, m] : mult) {
        for (int j1 = 1; j1 <= m; ++j1)
            for (int j2 = j1 + 1; j2 <= m; ++j2)
                gens.push_back({0, [len = len, j1, j2](const ConsistentLabelling& l) {
                                    return exchange_op(l, len, j1, j2);
                                }});
        for (int j = 1; j <= m; ++j) {
            if (len % 2 == 1)
                gens.push_back({1, [len = len, j](const ConsistentLabelling& l) {
                                    return shift_op(l, len, j, 1);
                                }});
            else {
                gens.push_back({2, [len = len, j](const ConsistentLabelling& l) {
                                    return shift_op(l, len, j, 2);
                                }});
                even_copies.emplace_back(len, j);
            }
        }
    }
    for (size_t a = 0; a < even_copies.size(); ++a)
        for (size_t b = a + 1; b < even_copies.size(); ++b)
            gens.push_back({3, [ca = even_copies[a], cb = even_copies[b]](const ConsistentLabelling& l) {
                                return shift_op(shift_op(l, ca.first, ca.second, 1), cb.first,
                                                cb.second, 1);
                            }});

    std::vector<ConsistentLabelling> orbit{start};
    std::set<std::string> seen{start.bottom_key()};
    std::queue<ConsistentLabelling> q;
    q.push(start);
    while (!q.empty()) {
        const ConsistentLabelling cur = std::move(q.front());
        q.pop();
        for (const Gen& g : gens) {
            ConsistentLabelling nxt = g.apply(cur);
            if (seen.insert(nxt.bottom_key()).second) {
                orbit.push_back(nxt);
                q.push(nxt);
            }
        }
    }
    for (const Gen& g : gens) gen_images.emplace_back(g.family, g.apply(start).bottom_key());
    return orbit;
}

// the case split of the 2-point answer for target label b at a position
// currently labelled b0, given the multiset of even cycle lengths
bool two_point_predicate(const Label& b, const Label& b0, int even_cycles, int unique_even_len) {
    if (b.is_rank()) return b0 == b;
    if (b0.is_rank()) return false;
    if (b0.len != b.len) return false;
    if (even_cycles == 1 && b.len == unique_even_len)
        return ((b0.pos - b.pos) & 1) == 0;
    return true;
}

} // namespace

MonodromyReport monodromy_group(const Permutation& p, const ConsistentLabelling& lab,
                                std::size_t state_limit) {
    if (!verify_consistent(p, lab)) throw std::invalid_argument("monodromy_group: inconsistent labelling");

    MonodromyReport rep;
    std::unordered_set<std::string> seen;
    std::set<std::string> reach_keys;
    std::queue<std::pair<Permutation, ConsistentLabelling>> q;

    auto key_of = [](const Permutation& perm, const ConsistentLabelling& l) {
        return perm.to_string() + '|' + l.bottom_key();
    };
    seen.insert(key_of(p, lab));
    q.emplace(p, lab);
    rep.reachable.push_back(lab);
    reach_keys.insert(lab.bottom_key());

    while (!q.empty()) {
        auto [perm, cur] = std::move(q.front());
        q.pop();
        for (const bool right : {false, true}) {
            auto [perm2, lab2] = right ? labelled_R(perm, cur) : labelled_L(perm, cur);
            if (seen.size() > state_limit) throw std::runtime_error("monodromy_group: state limit exceeded");
            if (!seen.insert(key_of(perm2, lab2)).second) continue;
            if (perm2 == p && reach_keys.insert(lab2.bottom_key()).second)
                rep.reachable.push_back(lab2);
            q.emplace(std::move(perm2), std::move(lab2));
        }
    }
    rep.labelled_states = seen.size();

    std::vector<std::pair<int, std::string>> gen_images;
    const std::vector<ConsistentLabelling> orbit = generated_labellings(p, lab, gen_images);
    std::set<std::string> orbit_keys;
    for (const auto& l : orbit) orbit_keys.insert(l.bottom_key());
    rep.matches_generated_group = orbit_keys == reach_keys;
    // a generator family is realized when each of its members is reached by a loop
    for (int f = 0; f < 4; ++f) rep.generator_status[f] = true;
    for (const auto& [family, image] : gen_images)
        if (!reach_keys.count(image)) rep.generator_status[static_cast<size_t>(family)] = false;

    // 2-point answers against the case split
    const CycleData cd = cycle_data(p);
    int even_cycles = 0, unique_even_len = 0;
    for (int len : cd.lambda)
        if (len % 2 == 0) {
            ++even_cycles;
            unique_even_len = len;
        }
    std::vector<Label> universe;
    for (const Label& l : lab.pi_b) universe.push_back(l);
    rep.two_point_matches = true;
    for (const Label& b : universe)
        for (int beta = 1; beta <= p.size(); ++beta) {
            bool bfs = false;
            for (const auto& l : rep.reachable)
                if (l.pi_b[static_cast<size_t>(beta) - 1] == b) {
                    bfs = true;
                    break;
                }
            const bool want = two_point_predicate(b, lab.pi_b[static_cast<size_t>(beta) - 1],
                                                  even_cycles, unique_even_len);
            if (bfs != want) rep.two_point_matches = false;
        }
    return rep;
}

} // namespace rauzy
