#pragma once

#include <heckeforge/multipoly.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace heckeforge {

/// s_{jk}: swaps the variables x_j and x_k (1-based) in every term.
inline MultiPoly transposition_action(const MultiPoly& p, int j, int k) {
    p.check_index(j);
    p.check_index(k);
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents f = e;
        std::swap(f[j - 1], f[k - 1]);
        out.add_term(std::move(f), c);
    }
    return out;
}

namespace detail {

/// Exact division by (x_j - x_k). The callers feed antisymmetrized
/// polynomials, which are always divisible; a nonzero remainder would mean
/// the operator algebra itself is broken, so it throws logic_error.
inline MultiPoly divide_by_difference(MultiPoly num, int j, int k) {
    MultiPoly quot(num.nvars());
    while (!num.is_zero()) {
        // take a term with maximal x_j exponent (lex-largest among those)
        const MultiPoly::Exponents* best = nullptr;
        const Rational* coeff = nullptr;
        for (const auto& [e, c] : num.terms())
            if (!best || e[j - 1] > (*best)[j - 1] ||
                (e[j - 1] == (*best)[j - 1] && e > *best)) {
                best = &e;
                coeff = &c;
            }
        if ((*best)[j - 1] == 0)
            throw std::logic_error("divide_by_difference: nonzero remainder");
        MultiPoly::Exponents q = *best;
        q[j - 1] -= 1;
        const Rational c = *coeff;
        quot.add_term(q, c);
        // num -= c * x^q * (x_j - x_k)
        MultiPoly::Exponents withk = q;
        withk[k - 1] += 1;
        num.add_term(*best, -c);
        num.add_term(std::move(withk), c);
    }
    return quot;
}

} // namespace detail

/// The Dunkl operator D_j = d/dx_j + beta * sum_{k != j} (1 - s_{jk}) / (x_j - x_k)
/// applied to p. The difference quotients are exact polynomial divisions.
inline MultiPoly dunkl_apply(const MultiPoly& p, int j, const Rational& beta) {
    p.check_index(j);
    MultiPoly out = partial_derivative(p, j);
    if (beta == 0) return out;
    for (int k = 1; k <= p.nvars(); ++k) {
        if (k == j) continue;
        MultiPoly diff = p - transposition_action(p, j, k);
        if (diff.is_zero()) continue;
        out += beta * detail::divide_by_difference(std::move(diff), j, k);
    }
    return out;
}

/// D_j D_k p - D_k D_j p; identically zero (the family commutes), exposed so
/// the contract can be checked exactly.
inline MultiPoly dunkl_commutator(int j, int k, const Rational& beta, const MultiPoly& p) {
    p.check_index(j);
    p.check_index(k);
    if (j == k) throw std::domain_error("dunkl_commutator: j and k must differ");
    return dunkl_apply(dunkl_apply(p, k, beta), j, beta) -
           dunkl_apply(dunkl_apply(p, j, beta), k, beta);
}

} // namespace heckeforge
