#include "rauzy/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rauzy {

void Permutation::validate() const {
    const int n = size();
    if (n == 0) throw std::invalid_argument("permutation must have size >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n) throw std::invalid_argument("image out of range 1..n");
        if (seen[static_cast<size_t>(v) - 1]) throw std::invalid_argument("duplicate image");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> v;
    int x;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw std::invalid_argument("bad permutation text: " + text);
    return Permutation(std::move(v));
}

int Permutation::inverse_at(int v) const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) == v) return i;
    throw std::invalid_argument("value out of range");
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::mirror() const {
    const int n = size();
    std::vector<int> m(images_.size());
    for (int i = 1; i <= n; ++i) m[static_cast<size_t>(i) - 1] = n + 1 - (*this)(n + 1 - i);
    return Permutation(std::move(m));
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << ' ';
        out << images_[static_cast<size_t>(i)];
    }
    return out.str();
}

std::uint64_t Permutation::lehmer_rank() const {
    const int n = size();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<size_t>(j)] < images_[static_cast<size_t>(i)]) ++smaller;
        rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

bool is_irreducible(const Permutation& p) {
    const int n = p.size();
    // prefix of size k equals {n-k+1..n} iff its minimum is n-k+1
    int mn = n + 1;
    for (int k = 1; k < n; ++k) {
        mn = std::min(mn, p(k));
        if (mn == n - k + 1) return false;
    }
    return true;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t count_irreducible(int n) {
    std::uint64_t c = 0;
    for_each_irreducible(n, [&](const Permutation&) { ++c; });
    return c;
}

void for_each_irreducible(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        if (is_irreducible(p)) fn(p);
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace rauzy
