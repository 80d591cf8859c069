#include "rauzy/ops.hpp"

namespace rauzy {

namespace {

void check_index(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("gamma index out of range");
}

void check_irreducible(const Permutation& p) {
    if (!is_irreducible(p)) throw std::invalid_argument("operator applied to reducible permutation");
}

} // namespace

Permutation gamma_L(int n, int i) {
    check_index(n, i);
    std::vector<int> v(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int y;
        if (x < i) y = (x == 1) ? i - 1 : x - 1;  // cycle (i-1 i-2 ... 1)
        else y = x;
        v[static_cast<size_t>(x) - 1] = y;
    }
    return Permutation(std::move(v));
}

Permutation gamma_R(int n, int i) {
    check_index(n, i);
    std::vector<int> v(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int y;
        if (x <= i) y = x;
        else y = (x == n) ? i + 1 : x + 1;  // cycle (i+1 i+2 ... n)
        v[static_cast<size_t>(x) - 1] = y;
    }
    return Permutation(std::move(v));
}

Permutation gamma_t(int n, int i) {
    check_index(n, i);
    std::vector<int> v(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int y;
        if (x <= i) y = x;
        else if (x == i + 1) y = n;           // cycle (i+1 n n-1 ... i+2)
        else y = x - 1;
        v[static_cast<size_t>(x) - 1] = y;
    }
    return Permutation(std::move(v));
}

Permutation gamma_b(int n, int i) {
    check_index(n, i);
    std::vector<int> v(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int y;
        if (x >= i) y = x;
        else if (x == i - 1) y = 1;           // cycle (2 3 ... i-1 1)
        else y = x + 1;
        v[static_cast<size_t>(x) - 1] = y;
    }
    return Permutation(std::move(v));
}

Permutation apply_L(const Permutation& p) {
    check_irreducible(p);
    const int n = p.size();
    if (n == 1) return p;
    const int s1 = p(1);
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int x = p(i);
        if (x <= s1) v[static_cast<size_t>(i) - 1] = x;
        else if (x <= n - 1) v[static_cast<size_t>(i) - 1] = x + 1;
        else v[static_cast<size_t>(i) - 1] = s1 + 1;
    }
    return Permutation(std::move(v));
}

Permutation apply_L_inv(const Permutation& p) {
    check_irreducible(p);
    const int n = p.size();
    if (n == 1) return p;
    const int s1 = p(1);  // L preserves sigma(1)
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int x = p(i);
        if (x <= s1) v[static_cast<size_t>(i) - 1] = x;
        else if (x == s1 + 1) v[static_cast<size_t>(i) - 1] = n;
        else v[static_cast<size_t>(i) - 1] = x - 1;
    }
    return Permutation(std::move(v));
}

Permutation apply_R(const Permutation& p) {
    check_irreducible(p);
    const int n = p.size();
    if (n == 1) return p;
    const Permutation g = gamma_b(n, p.inverse_at(n));
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = p(g(i));
    return Permutation(std::move(v));
}

Permutation apply_R_inv(const Permutation& p) {
    check_irreducible(p);
    const int n = p.size();
    if (n == 1) return p;
    // R preserves the position of the value n
    const Permutation ginv = gamma_b(n, p.inverse_at(n)).inverse();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = p(ginv(i));
    return Permutation(std::move(v));
}

Permutation apply_L_via_gamma(const Permutation& p) {
    check_irreducible(p);
    const int n = p.size();
    if (n == 1) return p;
    const Permutation ginv = gamma_t(n, p(1)).inverse();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = ginv(p(i));
    return Permutation(std::move(v));
}

Permutation apply_R_via_gamma(const Permutation& p) { return apply_R(p); }

OpWord OpWord::parse(const std::string& text) {
    for (char c : text)
        if (c != 'L' && c != 'R' && c != 'l' && c != 'r')
            throw std::invalid_argument("bad operator letter in word: " + text);
    return OpWord{text};
}

Permutation apply_word(const Permutation& p, const OpWord& w) {
    Permutation q = p;
    for (char c : w.letters) {
        switch (c) {
            case 'L': q = apply_L(q); break;
            case 'R': q = apply_R(q); break;
            case 'l': q = apply_L_inv(q); break;
            case 'r': q = apply_R_inv(q); break;
            default: throw std::invalid_argument("bad operator letter");
        }
    }
    return q;
}

} // namespace rauzy
