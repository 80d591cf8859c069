#include "rauzy/labelling.hpp"

#include "rauzy/ops.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rauzy {

std::string Label::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::RankBottom: out << "brk[" << pos << ']'; break;
        case Kind::RankTop: out << "trk[" << pos << ']'; break;
        case Kind::CycleBottom: out << "b[" << pos << ',' << len << ',' << copy << ']'; break;
        case Kind::CycleTop: out << "t[" << pos << ',' << len << ',' << copy << ']'; break;
    }
    return out.str();
}

int ConsistentLabelling::find_bottom(const Label& l) const {
    for (size_t i = 0; i < pi_b.size(); ++i)
        if (pi_b[i] == l) return static_cast<int>(i) + 1;
    return 0;
}

int ConsistentLabelling::find_top(const Label& l) const {
    for (size_t i = 0; i < pi_t.size(); ++i)
        if (pi_t[i] == l) return static_cast<int>(i) + 1;
    return 0;
}

std::string ConsistentLabelling::bottom_key() const {
    std::string key;
    key.reserve(pi_b.size() * 3);
    for (const Label& l : pi_b) {
        key.push_back(static_cast<char>(l.is_rank() ? -1 : l.len));
        key.push_back(static_cast<char>(l.pos));
        key.push_back(static_cast<char>(l.copy));
    }
    return key;
}

std::string ConsistentLabelling::to_json() const {
    std::ostringstream out;
    auto dump = [&](const std::vector<Label>& side) {
        out << '[';
        for (size_t i = 0; i < side.size(); ++i) {
            if (i) out << ',';
            out << '"' << side[i].to_string() << '"';
        }
        out << ']';
    };
    out << "{\"pi_b\":";
    dump(pi_b);
    out << ",\"pi_t\":";
    dump(pi_t);
    out << '}';
    return out.str();
}

int consecutive_bottom(const Permutation& p, int beta) {
    const int n = p.size();
    if (beta < 1 || beta >= n) throw std::invalid_argument("consecutive_bottom: arc out of range");
    const int j = p(beta + 1);
    return j < n ? p.inverse_at(j + 1) : p.inverse_at(p(1) + 1);
}

int consecutive_top(const Permutation& p, int alpha) {
    const int n = p.size();
    if (alpha < 1 || alpha > n) throw std::invalid_argument("consecutive_top: arc out of range");
    const int i = p.inverse_at(alpha);
    if (i >= n) throw std::invalid_argument("consecutive_top: last rank arc has no successor");
    const int j = p(i + 1);
    return j < n ? j + 1 : p(1) + 1;
}

namespace {

Label match_top(const Label& b) {
    Label t = b;
    t.kind = b.is_rank() ? Label::Kind::RankTop : Label::Kind::CycleTop;
    return t;
}

} // namespace

std::vector<Label> top_from_bottom(const Permutation& p, const std::vector<Label>& pi_b) {
    const int n = p.size();
    std::vector<Label> pi_t(static_cast<size_t>(n));
    // the bottom-right arc of edge i is bottom arc i, its top-left arc is top
    // arc sigma(i); property 3 matches their indices
    for (int i = 1; i <= n; ++i)
        pi_t[static_cast<size_t>(p(i)) - 1] = match_top(pi_b[static_cast<size_t>(i) - 1]);
    return pi_t;
}

ConsistentLabelling canonical_labelling(const Permutation& p) {
    const CycleData cd = cycle_data(p);
    const int n = p.size();
    ConsistentLabelling lab;
    lab.pi_b.resize(static_cast<size_t>(n));

    for (size_t k = 0; k < cd.rank_path.bottoms.size(); ++k)
        lab.pi_b[static_cast<size_t>(cd.rank_path.bottoms[k]) - 1] =
            Label{Label::Kind::RankBottom, static_cast<int>(k), 0, 0};

    // copies of equal length numbered by smallest bottom arc, position 0
    // anchored there
    std::map<int, int> next_copy;
    std::vector<std::pair<int, int>> anchors;  // (smallest bottom arc, cycle id)
    for (int c = 0; c < cd.num_cycles(); ++c) {
        const auto& bots = cd.cycles[static_cast<size_t>(c)].bottoms;
        anchors.emplace_back(*std::min_element(bots.begin(), bots.end()), c);
    }
    std::sort(anchors.begin(), anchors.end());
    for (const auto& [anchor, c] : anchors) {
        const int len = static_cast<int>(cd.cycles[static_cast<size_t>(c)].tops.size());
        const int copy = ++next_copy[len];
        int beta = anchor;
        for (int pos = 0; pos < len; ++pos) {
            lab.pi_b[static_cast<size_t>(beta) - 1] =
                Label{Label::Kind::CycleBottom, pos, len, copy};
            beta = consecutive_bottom(p, beta);
        }
        if (beta != anchor) throw std::logic_error("cycle not closed under consecutive_bottom");
    }

    lab.pi_t = top_from_bottom(p, lab.pi_b);
    return lab;
}

bool verify_consistent(const Permutation& p, const ConsistentLabelling& lab) {
    const int n = p.size();
    if (static_cast<int>(lab.pi_b.size()) != n || static_cast<int>(lab.pi_t.size()) != n)
        return false;

    // property 2 on bottom arcs
    for (int beta = 1; beta < n; ++beta) {
        const Label& b = lab.pi_b[static_cast<size_t>(beta) - 1];
        const Label& b2 = lab.pi_b[static_cast<size_t>(consecutive_bottom(p, beta)) - 1];
        if (b.is_rank()) {
            if (!(b2.is_rank() && b2.pos == b.pos + 1)) return false;
        } else {
            if (!(b2.len == b.len && b2.copy == b.copy && b2.pos == (b.pos + 1) % b.len))
                return false;
        }
    }
    // property 3
    for (int i = 1; i <= n; ++i)
        if (!(lab.pi_t[static_cast<size_t>(p(i)) - 1] ==
              match_top(lab.pi_b[static_cast<size_t>(i) - 1])))
            return false;
    // pinned first rank label
    return lab.pi_t[0] == Label{Label::Kind::RankTop, 0, 0, 0};
}

bool verify_consistent_full(const Permutation& p, const ConsistentLabelling& lab) {
    if (!verify_consistent(p, lab)) return false;
    const CycleData cd = cycle_data(p);
    const int n = p.size();

    // property 1: each cycle's arcs carry exactly one (len, copy) alphabet
    for (const auto& cyc : cd.cycles) {
        const int len = static_cast<int>(cyc.tops.size());
        std::vector<char> seen_b(static_cast<size_t>(len), 0), seen_t(static_cast<size_t>(len), 0);
        int copy_b = -1, copy_t = -1;
        for (int beta : cyc.bottoms) {
            const Label& l = lab.pi_b[static_cast<size_t>(beta) - 1];
            if (l.is_rank() || l.len != len || l.pos < 0 || l.pos >= len) return false;
            if (copy_b < 0) copy_b = l.copy;
            if (l.copy != copy_b || seen_b[static_cast<size_t>(l.pos)]++) return false;
        }
        for (int alpha : cyc.tops) {
            const Label& l = lab.pi_t[static_cast<size_t>(alpha) - 1];
            if (l.is_rank() || l.len != len || l.pos < 0 || l.pos >= len) return false;
            if (copy_t < 0) copy_t = l.copy;
            if (l.copy != copy_t || seen_t[static_cast<size_t>(l.pos)]++) return false;
        }
        if (copy_b != copy_t) return false;
    }
    // property 4: rank labels in path order
    for (size_t k = 0; k < cd.rank_path.tops.size(); ++k) {
        const Label& t = lab.pi_t[static_cast<size_t>(cd.rank_path.tops[k]) - 1];
        const Label& b = lab.pi_b[static_cast<size_t>(cd.rank_path.bottoms[k]) - 1];
        if (!(t == Label{Label::Kind::RankTop, static_cast<int>(k), 0, 0})) return false;
        if (!(b == Label{Label::Kind::RankBottom, static_cast<int>(k), 0, 0})) return false;
    }
    (void)n;
    return true;
}

namespace {

ConsistentLabelling map_labels(const ConsistentLabelling& lab,
                               const std::function<void(Label&)>& fn) {
    ConsistentLabelling out = lab;
    for (Label& l : out.pi_b) fn(l);
    for (Label& l : out.pi_t) fn(l);
    return out;
}

} // namespace

ConsistentLabelling shift_op(const ConsistentLabelling& lab, int len, int copy, int m) {
    bool found = false;
    ConsistentLabelling out = map_labels(lab, [&](Label& l) {
        if (!l.is_rank() && l.len == len && l.copy == copy) {
            l.pos = ((l.pos + m) % len + len) % len;
            found = true;
        }
    });
    if (!found) throw std::invalid_argument("shift_op: no such cycle copy");
    return out;
}

ConsistentLabelling exchange_op(const ConsistentLabelling& lab, int len, int j1, int j2) {
    bool f1 = false, f2 = false;
    ConsistentLabelling out = map_labels(lab, [&](Label& l) {
        if (!l.is_rank() && l.len == len) {
            if (l.copy == j1) {
                l.copy = j2;
                f1 = true;
            } else if (l.copy == j2) {
                l.copy = j1;
                f2 = true;
            }
        }
    });
    if (!f1 || !f2) throw std::invalid_argument("exchange_op: missing cycle copy");
    return out;
}

std::pair<Permutation, ConsistentLabelling> labelled_L(const Permutation& p,
                                                       const ConsistentLabelling& lab) {
    if (!verify_consistent(p, lab)) throw std::invalid_argument("labelled_L: inconsistent labelling");
    const int n = p.size();
    ConsistentLabelling out;
    out.pi_b = lab.pi_b;
    out.pi_t.resize(static_cast<size_t>(n));
    const Permutation g = gamma_t(n, p(1));
    for (int alpha = 1; alpha <= n; ++alpha)
        out.pi_t[static_cast<size_t>(alpha) - 1] = lab.pi_t[static_cast<size_t>(g(alpha)) - 1];
    return {apply_L(p), std::move(out)};
}

std::pair<Permutation, ConsistentLabelling> labelled_R(const Permutation& p,
                                                       const ConsistentLabelling& lab) {
    if (!verify_consistent(p, lab)) throw std::invalid_argument("labelled_R: inconsistent labelling");
    const int n = p.size();
    ConsistentLabelling out;
    out.pi_t = lab.pi_t;
    out.pi_b.resize(static_cast<size_t>(n));
    const Permutation g = gamma_b(n, p.inverse_at(n));
    for (int beta = 1; beta <= n; ++beta)
        out.pi_b[static_cast<size_t>(beta) - 1] = lab.pi_b[static_cast<size_t>(g(beta)) - 1];
    return {apply_R(p), std::move(out)};
}

unsigned long long count_labellings(const Permutation& p) {
    const CycleData cd = cycle_data(p);
    std::map<int, int> mult;
    for (int len : cd.lambda) ++mult[len];
    unsigned long long total = 1;
    for (const auto& [len, m] : mult) {
        for (int k = 2; k <= m; ++k) total *= static_cast<unsigned long long>(k);
        for (int k = 0; k < m; ++k) total *= static_cast<unsigned long long>(len);
    }
    return total;
}

std::vector<ConsistentLabelling> enumerate_labellings(const Permutation& p, std::size_t cap) {
    if (count_labellings(p) > cap)
        throw std::invalid_argument("enumerate_labellings: count exceeds cap");
    const ConsistentLabelling base = canonical_labelling(p);

    std::map<int, int> mult;
    for (const Label& l : base.pi_b)
        if (!l.is_rank()) mult[l.len] = std::max(mult[l.len], l.copy);

    std::vector<ConsistentLabelling> out{base};
    // per length group, expand by copy permutations and per-copy shifts
    for (const auto& [len, m] : mult) {
        std::vector<int> perm(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) perm[static_cast<size_t>(j)] = j + 1;
        std::vector<ConsistentLabelling> next;
        do {
            std::vector<int> shifts(static_cast<size_t>(m), 0);
            for (;;) {
                for (const ConsistentLabelling& lab : out) {
                    ConsistentLabelling v = map_labels(lab, [&](Label& l) {
                        if (!l.is_rank() && l.len == len) {
                            l.pos = (l.pos + shifts[static_cast<size_t>(l.copy) - 1]) % len;
                            l.copy = perm[static_cast<size_t>(l.copy) - 1];
                        }
                    });
                    next.push_back(std::move(v));
                }
                int k = 0;
                while (k < m && ++shifts[static_cast<size_t>(k)] == len) shifts[static_cast<size_t>(k++)] = 0;
                if (k == m) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = std::move(next);
    }
    return out;
}

} // namespace rauzy
