#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rauzy {

// A permutation of {1..n} in one-line notation. Indexing is 1-based at every
// public surface; the backing vector is the only 0-based thing here.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        validate();
    }

    static Permutation identity(int n);

    // Parses whitespace-separated 1-based images, e.g. "4 5 1 2 6 3".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(images_.size()); }

    // sigma(i), 1 <= i <= n
    int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }

    // position of value v, i.e. sigma^{-1}(v)
    int inverse_at(int v) const;

    Permutation inverse() const;

    // mirror(sigma)(i) = n+1-sigma(n+1-i)
    Permutation mirror() const;

    // 180-degree rotation of the diagram: mirror of the inverse. Conjugation
    // by it swaps the L and R operators.
    Permutation rotate180() const { return inverse().mirror(); }

    const std::vector<int>& images() const { return images_; }

    // Single spaces, no trailing newline.
    std::string to_string() const;

    // Lehmer rank in [0, n!), usable as a visited-set index for n <= 20.
    std::uint64_t lehmer_rank() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    void validate() const;

    std::vector<int> images_;
};

// true iff no prefix {sigma(1..k)} equals {n-k+1..n} for k < n
bool is_irreducible(const Permutation& p);

std::uint64_t factorial(int n);

// number of irreducible permutations of size n, by direct filtering
std::uint64_t count_irreducible(int n);

// calls fn(p) for every irreducible permutation of size n, lex order
void for_each_irreducible(int n, const std::function<void(const Permutation&)>& fn);

} // namespace rauzy
