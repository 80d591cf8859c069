#pragma once

#include "rauzy/perm.hpp"

namespace rauzy {

// The four one-parameter permutation families behind the dynamics operators,
// in one-line form.
//   gamma_L(n,i) = (i-1 i-2 ... 1)(i)(i+1)...(n)
//   gamma_R(n,i) = (1)(2)...(i)(i+1 i+2 ... n)
//   gamma_t(n,i) = (1)(2)...(i)(i+1 n n-1 ... i+2)
//   gamma_b(n,i) = (2 3 ... i-1 1)(i)(i+1)...(n)
Permutation gamma_L(int n, int i);
Permutation gamma_R(int n, int i);
Permutation gamma_t(int n, int i);
Permutation gamma_b(int n, int i);

// The dynamics operators on irreducible permutations. Each rejects reducible
// input and each of apply_L/apply_R has a closed-form inverse.
Permutation apply_L(const Permutation& p);
Permutation apply_R(const Permutation& p);
Permutation apply_L_inv(const Permutation& p);
Permutation apply_R_inv(const Permutation& p);

// gamma-composition forms, kept as an internal cross-check of the piecewise
// formulas: L = gamma_t(n, sigma(1))^{-1} o sigma, R = sigma o gamma_b(n, sigma^{-1}(n)).
Permutation apply_L_via_gamma(const Permutation& p);
Permutation apply_R_via_gamma(const Permutation& p);

struct OpWord {
    // letters: 'L', 'R', 'l' (L^{-1}), 'r' (R^{-1})
    std::string letters;

    static OpWord parse(const std::string& text);
};

// left-to-right application of the word's letters
Permutation apply_word(const Permutation& p, const OpWord& w);

} // namespace rauzy
