#include "rauzy/prover.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <array>
#include <functional>

#include <json.hpp>

namespace rauzy {

namespace {

long long checked_mul(long long a, long long b) {
    const __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("fraction overflow");
    return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
    const __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("fraction overflow");
    return static_cast<long long>(r);
}

} // namespace

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                    checked_mul(den, o.den));
}
Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }
Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(checked_mul(num, o.num), checked_mul(den, o.den));
}
Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num == 0) throw std::invalid_argument("fraction: division by zero");
    return Fraction(checked_mul(num, o.den), checked_mul(den, o.num));
}

std::string Fraction::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + '/' + std::to_string(den);
}

Fraction Fraction::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Fraction(std::stoll(text));
    return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

void MarkedPermutation::validate() const {
    if (k < 0 || l < 0) throw std::invalid_argument("marked permutation: negative mark count");
    if ((k + 1) * (l + 1) > kProverRegionCap)
        throw std::invalid_argument("marked permutation: region cap exceeded");
    if (static_cast<int>(edges.size()) > kProverEdgeCap)
        throw std::invalid_argument("marked permutation: edge cap exceeded");
    std::map<int, std::set<int>> bottom_ranks, top_ranks;
    for (const MarkedEdge& e : edges) {
        if (e.i < 0 || e.i > k + 1 || e.j < 0 || e.j > l + 1)
            throw std::invalid_argument("marked permutation: mark index out of range");
        if (!bottom_ranks[e.i].insert(e.x).second || !top_ranks[e.j].insert(e.y).second)
            throw std::invalid_argument("marked permutation: duplicate within-mark rank");
    }
    for (const auto& [mark, ranks] : bottom_ranks)
        if (*ranks.begin() != 1 || *ranks.rbegin() != static_cast<int>(ranks.size()))
            throw std::invalid_argument("marked permutation: bottom ranks not contiguous");
    for (const auto& [mark, ranks] : top_ranks)
        if (*ranks.begin() != 1 || *ranks.rbegin() != static_cast<int>(ranks.size()))
            throw std::invalid_argument("marked permutation: top ranks not contiguous");
    auto check_pi = [](const std::vector<int>& pi, int size, const char* side) {
        if (pi.empty()) return;
        if (static_cast<int>(pi.size()) != size)
            throw std::invalid_argument(std::string("marked permutation: bad ") + side + " size");
        std::vector<char> seen(pi.size(), 0);
        for (int v : pi) {
            if (v < 1 || v > size || seen[static_cast<size_t>(v) - 1])
                throw std::invalid_argument(std::string("marked permutation: bad ") + side);
            seen[static_cast<size_t>(v) - 1] = 1;
        }
    };
    check_pi(pi_minus, k + 1, "pi_minus");
    check_pi(pi_plus, l + 1, "pi_plus");
}

QMatrix q_matrix(const MarkedPermutation& m) {
    m.validate();
    QMatrix q;
    q.k = m.k;
    q.l = m.l;
    for (const MarkedEdge& e : m.edges) {
        std::uint32_t row = 0;
        for (int i = 1; i <= m.k + 1; ++i)
            for (int j = 1; j <= m.l + 1; ++j)
                if ((e.i < i) == (e.j < j))
                    row |= 1u << ((i - 1) * (m.l + 1) + (j - 1));
        q.rows.push_back(row);
    }
    return q;
}

std::vector<int> QMatrix::row_bits(std::size_t e) const {
    std::vector<int> bits;
    for (int pos = 0; pos < (k + 1) * (l + 1); ++pos) bits.push_back(rows[e] >> pos & 1);
    return bits;
}

namespace {

// v reindexed through the block permutations: slot (i,j) reads region
// (pi_minus(i), pi_plus(j))
std::uint32_t permuted_v(const MarkedPermutation& m, std::uint32_t v) {
    if (m.pi_minus.empty() && m.pi_plus.empty()) return v;
    std::uint32_t out = 0;
    for (int i = 1; i <= m.k + 1; ++i)
        for (int j = 1; j <= m.l + 1; ++j) {
            const int si = m.pi_minus.empty() ? i : m.pi_minus[static_cast<size_t>(i) - 1];
            const int sj = m.pi_plus.empty() ? j : m.pi_plus[static_cast<size_t>(j) - 1];
            if (v >> ((si - 1) * (m.l + 1) + (sj - 1)) & 1)
                out |= 1u << ((i - 1) * (m.l + 1) + (j - 1));
        }
    return out;
}

struct FiniteTables {
    int count = 0;
    std::uint32_t nc[kProverEdgeCap] = {};   // non-crossing masks among E'
    std::uint32_t qrow[kProverEdgeCap] = {};
};

FiniteTables finite_tables(const MarkedPermutation& m) {
    const QMatrix q = q_matrix(m);
    FiniteTables t;
    t.count = static_cast<int>(m.edges.size());
    for (int a = 0; a < t.count; ++a) {
        t.qrow[a] = q.rows[static_cast<size_t>(a)];
        for (int b = 0; b < t.count; ++b) {
            if (a == b) continue;
            const MarkedEdge& ea = m.edges[static_cast<size_t>(a)];
            const MarkedEdge& eb = m.edges[static_cast<size_t>(b)];
            const bool bot = std::pair(ea.i, ea.x) < std::pair(eb.i, eb.x);
            const bool top = std::pair(ea.j, ea.y) < std::pair(eb.j, eb.y);
            if (bot == top) t.nc[a] |= 1u << b;
        }
    }
    return t;
}

} // namespace

long long finite_arf(const MarkedPermutation& m, std::uint32_t v, Flavor flavor) {
    const FiniteTables t = finite_tables(m);
    const std::uint32_t w = permuted_v(m, v);
    // per-edge pairing bit (Qv)_e
    std::uint32_t qv = 0;
    for (int e = 0; e < t.count; ++e)
        if (std::popcount(t.qrow[e] & w) & 1) qv |= 1u << e;

    long long acc = 0;
    const std::uint64_t total = 1ull << t.count;
    std::uint32_t mask = 0;
    unsigned chi_par = 0, pair_par = 0, size_par = 0;
    for (std::uint64_t u = 0;; ++u) {
        long long s = (chi_par ^ pair_par) ? -1 : 1;
        if (flavor == Flavor::Abar && size_par) s = -s;
        acc += s;
        if (u + 1 == total) break;
        const int e = std::countr_zero(u + 1);
        chi_par ^= static_cast<unsigned>(std::popcount(mask & t.nc[e])) & 1u;
        pair_par ^= static_cast<unsigned>(qv >> e) & 1u;
        mask ^= 1u << e;
        size_par ^= 1u;
    }
    return acc;
}

namespace {

// Permuting the regions moves host edges in blocks, flipping the crossing
// status of the pairs whose bottom-region order xor top-region order flips.
// Mod 2 that correction is quadratic in the parity vector v.
unsigned pi_crossing_correction(const MarkedPermutation& m, std::uint32_t v) {
    if (m.pi_minus.empty() && m.pi_plus.empty()) return 0;
    const int kk = m.k + 1, ll = m.l + 1;
    auto slot_of = [](const std::vector<int>& pi, int region) {
        if (pi.empty()) return region;
        for (int a = 1; a <= static_cast<int>(pi.size()); ++a)
            if (pi[static_cast<size_t>(a) - 1] == region) return a;
        return region;
    };
    unsigned f = 0;
    for (int c1 = 0; c1 < kk * ll; ++c1) {
        if (!(v >> c1 & 1)) continue;
        for (int c2 = c1 + 1; c2 < kk * ll; ++c2) {
            if (!(v >> c2 & 1)) continue;
            const int i1 = c1 / ll + 1, j1 = c1 % ll + 1;
            const int i2 = c2 / ll + 1, j2 = c2 % ll + 1;
            bool flip = false;
            if (i1 != i2)
                flip ^= (i1 < i2) != (slot_of(m.pi_minus, i1) < slot_of(m.pi_minus, i2));
            if (j1 != j2)
                flip ^= (j1 < j2) != (slot_of(m.pi_plus, j1) < slot_of(m.pi_plus, j2));
            f ^= flip ? 1u : 0u;
        }
    }
    return f;
}

} // namespace

long long decomposition_term(const MarkedPermutation& m, Flavor flavor, std::uint32_t v) {
    const long long val = finite_arf(m, v, flavor);
    return pi_crossing_correction(m, v) ? -val : val;
}

namespace {

// host-level weight: a term of flavor Abar carries the extra (-1)^{|I|},
// whose parity equals |v(I)| mod 2
long long weighted_term(const MarkedPermutation& m, Flavor f, std::uint32_t v) {
    const long long val = decomposition_term(m, f, v);
    if (f == Flavor::Abar && (std::popcount(v) & 1)) return -val;
    return val;
}

} // namespace

CheckResult check_identity(const IdentitySpec& spec) {
    for (const IdentityTerm& t : spec.terms) {
        if (t.marked.k != spec.k || t.marked.l != spec.l)
            throw std::invalid_argument("check_identity: mismatched (k, l)");
        t.marked.validate();
    }
    const int cells = (spec.k + 1) * (spec.l + 1);
    if (cells > kProverRegionCap) throw std::invalid_argument("check_identity: region cap exceeded");
    for (std::uint32_t v = 0; v < (1u << cells); ++v) {
        Fraction sum(0);
        for (std::size_t t = 0; t < spec.terms.size(); ++t)
            sum = sum + spec.terms[t].coef *
                            Fraction(weighted_term(spec.terms[t].marked, spec.term_flavor(t), v));
        if (!sum.is_zero()) return CheckResult{false, v};
    }
    return CheckResult{true, 0};
}

std::vector<std::vector<Fraction>> solve_coefficients(
    const std::vector<std::pair<MarkedPermutation, Flavor>>& terms) {
    const std::size_t T = terms.size();
    if (T == 0) return {};
    int k = terms[0].first.k, l = terms[0].first.l;
    for (const auto& [m, f] : terms) {
        if (m.k != k || m.l != l) throw std::invalid_argument("solve_coefficients: mismatched (k, l)");
        m.validate();
    }
    const int cells = (k + 1) * (l + 1);

    // streamed row reduction; at most T pivot rows survive
    std::vector<std::vector<Fraction>> rows;  // echelon, pivot column strictly increasing
    std::vector<std::size_t> pivots;
    for (std::uint32_t v = 0; v < (1u << cells); ++v) {
        std::vector<Fraction> row(T);
        bool zero = true;
        for (std::size_t t = 0; t < T; ++t) {
            row[t] = Fraction(weighted_term(terms[t].first, terms[t].second, v));
            zero = zero && row[t].is_zero();
        }
        if (zero) continue;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (row[pivots[r]].is_zero()) continue;
            const Fraction f = row[pivots[r]] / rows[r][pivots[r]];
            for (std::size_t t = 0; t < T; ++t) row[t] = row[t] - f * rows[r][t];
        }
        std::size_t p = 0;
        while (p < T && row[p].is_zero()) ++p;
        if (p == T) continue;
        rows.push_back(std::move(row));
        pivots.push_back(p);
        if (rows.size() == T) break;  // full rank, kernel empty
        // keep echelon ordering
        for (std::size_t r = rows.size(); r-- > 1;)
            if (pivots[r] < pivots[r - 1]) {
                std::swap(pivots[r], pivots[r - 1]);
                std::swap(rows[r], rows[r - 1]);
            }
    }

    // back-substitute to reduced echelon form
    for (std::size_t r = rows.size(); r-- > 0;) {
        const Fraction lead = rows[r][pivots[r]];
        for (std::size_t t = 0; t < T; ++t) rows[r][t] = rows[r][t] / lead;
        for (std::size_t r2 = 0; r2 < r; ++r2) {
            const Fraction f = rows[r2][pivots[r]];
            if (f.is_zero()) continue;
            for (std::size_t t = 0; t < T; ++t) rows[r2][t] = rows[r2][t] - f * rows[r][t];
        }
    }

    std::vector<char> is_pivot(T, 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<Fraction>> kernel;
    for (std::size_t free = 0; free < T; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fraction> x(T, Fraction(0));
        x[free] = Fraction(1);
        for (std::size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = -rows[r][free];
        kernel.push_back(std::move(x));
    }
    return kernel;
}

namespace {

std::string marked_key(const MarkedPermutation& m) {
    std::string s;
    for (const MarkedEdge& e : m.edges) {
        s += std::to_string(e.i) + '.' + std::to_string(e.x) + '-' + std::to_string(e.j) + '.' +
             std::to_string(e.y) + ';';
    }
    return s;
}

// all edge sets of the given size over the marks: choose a multiset of
// (bottom mark, top mark) cells, fix x-ranks canonically, and enumerate the
// y-rank interleavings independently within every top mark
void enumerate_marked(int k, int l, int max_edges, std::vector<MarkedPermutation>& out) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i <= k + 1; ++i)
        for (int j = 0; j <= l + 1; ++j) cells.emplace_back(i, j);

    std::set<std::string> seen;
    auto emit_orderings = [&](const std::vector<std::pair<int, int>>& chosen) {
        std::vector<MarkedEdge> edges;
        std::map<int, int> bcount;
        for (auto [ci, cj] : chosen) edges.push_back(MarkedEdge{ci, ++bcount[ci], cj, 0});
        std::map<int, std::vector<std::size_t>> tgroup;
        for (std::size_t e = 0; e < edges.size(); ++e)
            tgroup[edges[e].j].push_back(e);
        std::vector<std::vector<int>> perms;  // y-ranks per group, odometer state
        std::vector<std::vector<std::size_t>> groups;
        for (auto& [mark, members] : tgroup) {
            groups.push_back(members);
            std::vector<int> p(members.size());
            std::iota(p.begin(), p.end(), 1);
            perms.push_back(std::move(p));
        }
        for (;;) {
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (std::size_t idx = 0; idx < groups[g].size(); ++idx)
                    edges[groups[g][idx]].y = perms[g][idx];
            MarkedPermutation m;
            m.k = k;
            m.l = l;
            m.edges = edges;
            std::sort(m.edges.begin(), m.edges.end(),
                      [](const MarkedEdge& a, const MarkedEdge& b) {
                          return std::tie(a.i, a.x, a.j, a.y) < std::tie(b.i, b.x, b.j, b.y);
                      });
            if (seen.insert(marked_key(m)).second) out.push_back(std::move(m));
            std::size_t g = 0;
            while (g < perms.size() && !std::next_permutation(perms[g].begin(), perms[g].end()))
                ++g;
            if (g == perms.size()) break;
        }
    };

    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!chosen.empty()) emit_orderings(chosen);
        if (static_cast<int>(chosen.size()) == max_edges) return;
        for (std::size_t c = from; c < cells.size(); ++c) {
            chosen.push_back(cells[c]);
            rec(c);
            chosen.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<IdentitySpec> enumerate_identities(const EnumerationBounds& bounds) {
    if (bounds.max_terms > 3)
        throw std::invalid_argument("enumerate_identities: more than three terms is over budget");
    std::vector<MarkedPermutation> configs;
    enumerate_marked(bounds.k, bounds.l, bounds.max_edges, configs);
    const int cells = (bounds.k + 1) * (bounds.l + 1);
    const std::size_t dim = 1u << cells;
    if (configs.size() * dim > bounds.budget * 8)
        throw std::invalid_argument("enumerate_identities: bounds exceed the configured budget");

    // value vector of every config, deduplicated; equal-function configs are
    // interchangeable in identities, so one representative suffices
    std::vector<std::vector<long long>> vecs;
    std::vector<std::size_t> rep;  // representative config index
    std::map<std::vector<long long>, std::size_t> classes;
    std::vector<std::size_t> zero_reps;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        std::vector<long long> w(dim);
        bool zero = true;
        for (std::uint32_t v = 0; v < dim; ++v) {
            w[v] = weighted_term(configs[c], Flavor::Abar, v);
            zero = zero && w[v] == 0;
        }
        if (zero) {
            zero_reps.push_back(c);
            continue;
        }
        if (classes.emplace(w, c).second) {
            vecs.push_back(std::move(w));
            rep.push_back(c);
        }
    }

    std::vector<IdentitySpec> out;
    auto emit = [&](const std::vector<std::size_t>& cfg_idx, const std::vector<long long>& coefs) {
        IdentitySpec spec;
        spec.k = bounds.k;
        spec.l = bounds.l;
        spec.flavor = Flavor::Abar;
        for (std::size_t t = 0; t < cfg_idx.size(); ++t)
            spec.terms.push_back(IdentityTerm{Fraction(coefs[t]), configs[cfg_idx[t]], {}});
        out.push_back(std::move(spec));
    };

    // single terms: identically vanishing configs
    if (bounds.max_terms >= 1)
        for (std::size_t c : zero_reps) emit({c}, {1});

    // pairs: proportional value vectors
    const std::size_t R = vecs.size();
    if (bounds.max_terms >= 2)
        for (std::size_t a = 0; a < R; ++a)
            for (std::size_t b = a + 1; b < R; ++b) {
                std::uint32_t p = 0;
                while (p < dim && vecs[a][p] == 0 && vecs[b][p] == 0) ++p;
                if (p == dim || vecs[a][p] == 0 || vecs[b][p] == 0) continue;
                const long long na = vecs[b][p], nb = vecs[a][p];
                bool prop = true;
                for (std::uint32_t v = 0; v < dim && prop; ++v)
                    prop = na * vecs[a][v] == nb * vecs[b][v];
                if (!prop) continue;
                const long long g = std::gcd(na < 0 ? -na : na, nb < 0 ? -nb : nb);
                emit({rep[a], rep[b]}, {na / g, -nb / g});
            }

    // triples: projection prefilter, then an exact integer dependence check
    if (bounds.max_terms >= 3 && R >= 3) {
        const std::uint32_t picks[6] = {0,
                                        static_cast<std::uint32_t>(dim / 5),
                                        static_cast<std::uint32_t>(2 * dim / 5),
                                        static_cast<std::uint32_t>(3 * dim / 5),
                                        static_cast<std::uint32_t>(4 * dim / 5),
                                        static_cast<std::uint32_t>(dim - 1)};
        std::vector<std::array<long long, 6>> proj(R);
        for (std::size_t a = 0; a < R; ++a)
            for (int p = 0; p < 6; ++p) proj[a][p] = vecs[a][picks[p]];
        auto dep3 = [](const std::array<long long, 6>& x, const std::array<long long, 6>& y,
                       const std::array<long long, 6>& z) {
            // all 3x3 minors over the six sampled coordinates vanish
            for (int p = 0; p < 6; ++p)
                for (int q = p + 1; q < 6; ++q)
                    for (int r = q + 1; r < 6; ++r) {
                        const __int128 det =
                            static_cast<__int128>(x[p]) * (static_cast<__int128>(y[q]) * z[r] - static_cast<__int128>(y[r]) * z[q]) -
                            static_cast<__int128>(x[q]) * (static_cast<__int128>(y[p]) * z[r] - static_cast<__int128>(y[r]) * z[p]) +
                            static_cast<__int128>(x[r]) * (static_cast<__int128>(y[p]) * z[q] - static_cast<__int128>(y[q]) * z[p]);
                        if (det != 0) return false;
                    }
            return true;
        };
        // exact: find coefficients (ca, cb, cc) with ca*A + cb*B + cc*C = 0
        auto exact_kernel = [&](std::size_t a, std::size_t b, std::size_t c,
                                std::vector<long long>& coefs) {
            const auto &A = vecs[a], &B = vecs[b], &C = vecs[c];
            // locate a nonsingular 2x2 block of (A,B)
            std::uint32_t p = 0;
            while (p < dim && A[p] == 0 && B[p] == 0) ++p;
            if (p == dim) return false;  // degenerate (excluded earlier)
            std::uint32_t q = p + 1;
            while (q < dim && A[p] * B[q] == A[q] * B[p]) ++q;
            if (q == dim) return false;  // A,B proportional: pair case handles it
            // solve alpha*A + beta*B = C on rows p,q with Cramer
            const __int128 den = static_cast<__int128>(A[p]) * B[q] - static_cast<__int128>(A[q]) * B[p];
            const __int128 na = static_cast<__int128>(C[p]) * B[q] - static_cast<__int128>(C[q]) * B[p];
            const __int128 nb = static_cast<__int128>(A[p]) * C[q] - static_cast<__int128>(A[q]) * C[p];
            for (std::uint32_t v = 0; v < dim; ++v)
                if (na * A[v] + nb * B[v] != den * C[v]) return false;
            long long la = static_cast<long long>(na), lb = static_cast<long long>(nb),
                      lc = static_cast<long long>(-den);
            if (la == 0 || lb == 0 || lc == 0) return false;  // not full support
            long long g = std::gcd(std::gcd(la < 0 ? -la : la, lb < 0 ? -lb : lb), lc < 0 ? -lc : lc);
            coefs = {la / g, lb / g, lc / g};
            if (coefs[0] < 0)
                for (long long& v : coefs) v = -v;
            return true;
        };
        for (std::size_t a = 0; a < R; ++a)
            for (std::size_t b = a + 1; b < R; ++b)
                for (std::size_t c = b + 1; c < R; ++c) {
                    if (!dep3(proj[a], proj[b], proj[c])) continue;
                    std::vector<long long> coefs;
                    if (exact_kernel(a, b, c, coefs)) emit({rep[a], rep[b], rep[c]}, coefs);
                }
    }
    return out;
}

Permutation instantiate(const MarkedPermutation& m, const Permutation& host,
                        const std::vector<int>& bottom_slots, const std::vector<int>& top_slots) {
    m.validate();
    const int nh = host.size();
    if (static_cast<int>(bottom_slots.size()) != m.k || static_cast<int>(top_slots.size()) != m.l)
        throw std::invalid_argument("instantiate: slot count mismatch");
    auto check_slots = [&](const std::vector<int>& slots) {
        for (std::size_t a = 0; a < slots.size(); ++a) {
            if (slots[a] < 1 || slots[a] > nh - 1)
                throw std::invalid_argument("instantiate: slot at a corner");
            if (a && slots[a] <= slots[a - 1])
                throw std::invalid_argument("instantiate: slots not increasing");
        }
    };
    check_slots(bottom_slots);
    check_slots(top_slots);

    auto cuts = [&](const std::vector<int>& slots) {
        std::vector<int> c{0};
        c.insert(c.end(), slots.begin(), slots.end());
        c.push_back(nh);
        return c;
    };
    const std::vector<int> bcut = cuts(bottom_slots), tcut = cuts(top_slots);

    // final bottom order: corner-0 edges, then per slot a: host region
    // pi_minus(a) followed by the edges of mark a; corner-(k+1) edges last
    struct Item {
        bool is_host;
        int idx;  // host position / value, or edge index
    };
    auto layout = [&](int marks, const std::vector<int>& cut, const std::vector<int>& pi,
                      auto edge_mark, auto edge_rank) {
        std::vector<Item> items;
        std::vector<std::vector<std::size_t>> at_mark(static_cast<size_t>(marks) + 2);
        for (std::size_t e = 0; e < m.edges.size(); ++e)
            at_mark[static_cast<size_t>(edge_mark(m.edges[e]))].push_back(e);
        for (auto& v : at_mark)
            std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
                return edge_rank(m.edges[a]) < edge_rank(m.edges[b]);
            });
        for (std::size_t e : at_mark[0]) items.push_back({false, static_cast<int>(e)});
        for (int a = 1; a <= marks + 1; ++a) {
            const int region = pi.empty() ? a : pi[static_cast<size_t>(a) - 1];
            for (int p = cut[static_cast<size_t>(region) - 1] + 1; p <= cut[static_cast<size_t>(region)]; ++p)
                items.push_back({true, p});
            if (a <= marks)
                for (std::size_t e : at_mark[static_cast<size_t>(a)])
                    items.push_back({false, static_cast<int>(e)});
        }
        for (std::size_t e : at_mark[static_cast<size_t>(marks) + 1])
            items.push_back({false, static_cast<int>(e)});
        return items;
    };

    const std::vector<Item> bottom = layout(
        m.k, bcut, m.pi_minus, [](const MarkedEdge& e) { return e.i; },
        [](const MarkedEdge& e) { return e.x; });
    const std::vector<Item> top = layout(
        m.l, tcut, m.pi_plus, [](const MarkedEdge& e) { return e.j; },
        [](const MarkedEdge& e) { return e.y; });

    const int n = nh + static_cast<int>(m.edges.size());
    std::vector<int> host_bottom_pos(static_cast<size_t>(nh) + 1);
    std::vector<int> edge_bottom_pos(m.edges.size());
    for (int pos = 1; pos <= n; ++pos) {
        const Item& it = bottom[static_cast<size_t>(pos) - 1];
        if (it.is_host)
            host_bottom_pos[static_cast<size_t>(it.idx)] = pos;
        else
            edge_bottom_pos[static_cast<size_t>(it.idx)] = pos;
    }
    std::vector<int> host_top_val(static_cast<size_t>(nh) + 1);
    std::vector<int> edge_top_val(m.edges.size());
    for (int val = 1; val <= n; ++val) {
        const Item& it = top[static_cast<size_t>(val) - 1];
        if (it.is_host)
            host_top_val[static_cast<size_t>(it.idx)] = val;
        else
            edge_top_val[static_cast<size_t>(it.idx)] = val;
    }

    std::vector<int> images(static_cast<size_t>(n));
    for (int p = 1; p <= nh; ++p)
        images[static_cast<size_t>(host_bottom_pos[static_cast<size_t>(p)]) - 1] =
            host_top_val[static_cast<size_t>(host(p))];
    for (std::size_t e = 0; e < m.edges.size(); ++e)
        images[static_cast<size_t>(edge_bottom_pos[e]) - 1] = edge_top_val[e];
    return Permutation(std::move(images));
}

std::uint32_t region_parity_vector(const MarkedPermutation& m, const Permutation& host,
                                   const std::vector<int>& bottom_slots,
                                   const std::vector<int>& top_slots,
                                   const std::vector<int>& edge_subset) {
    auto region_of = [](const std::vector<int>& slots, int pos) {
        int r = 1;
        for (int s : slots)
            if (pos > s) ++r;
        return r;
    };
    std::uint32_t v = 0;
    for (int e : edge_subset) {
        const int i = region_of(bottom_slots, e);
        const int j = region_of(top_slots, host(e));
        v ^= 1u << ((i - 1) * (m.l + 1) + (j - 1));
    }
    return v;
}

namespace {

using nlohmann::json;

MarkedPermutation marked_from_json(const json& jt, int k, int l) {
    MarkedPermutation m;
    m.k = k;
    m.l = l;
    for (const auto& je : jt.at("edges"))
        m.edges.push_back(MarkedEdge{je.at(0), je.at(1), je.at(2), je.at(3)});
    if (jt.contains("pi_minus")) m.pi_minus = jt.at("pi_minus").get<std::vector<int>>();
    if (jt.contains("pi_plus")) m.pi_plus = jt.at("pi_plus").get<std::vector<int>>();
    m.validate();
    return m;
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "A") return Flavor::A;
    if (s == "Abar") return Flavor::Abar;
    throw std::invalid_argument("identity spec: flavor must be \"A\" or \"Abar\"");
}

} // namespace

IdentitySpec parse_identity_spec_text(const std::string& text) {
    const json j = json::parse(text);
    IdentitySpec spec;
    spec.k = j.at("k");
    spec.l = j.at("l");
    spec.flavor = flavor_from_string(j.at("flavor"));
    for (const auto& jt : j.at("terms")) {
        IdentityTerm term;
        term.coef = Fraction::parse(jt.at("coef").get<std::string>());
        term.marked = marked_from_json(jt, spec.k, spec.l);
        if (jt.contains("flavor")) term.flavor = flavor_from_string(jt.at("flavor"));
        spec.terms.push_back(std::move(term));
    }
    return spec;
}

IdentitySpec parse_identity_spec(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_identity_spec_text(buf.str());
}

std::string identity_spec_to_json(const IdentitySpec& spec) {
    json j;
    j["k"] = spec.k;
    j["l"] = spec.l;
    j["flavor"] = spec.flavor == Flavor::A ? "A" : "Abar";
    j["terms"] = json::array();
    for (const IdentityTerm& t : spec.terms) {
        json jt;
        jt["coef"] = t.coef.to_string();
        jt["edges"] = json::array();
        for (const MarkedEdge& e : t.marked.edges) jt["edges"].push_back({e.i, e.x, e.j, e.y});
        if (!t.marked.pi_minus.empty()) jt["pi_minus"] = t.marked.pi_minus;
        if (!t.marked.pi_plus.empty()) jt["pi_plus"] = t.marked.pi_plus;
        if (t.flavor) jt["flavor"] = *t.flavor == Flavor::A ? "A" : "Abar";
        j["terms"].push_back(std::move(jt));
    }
    return j.dump(2);
}

} // namespace rauzy
