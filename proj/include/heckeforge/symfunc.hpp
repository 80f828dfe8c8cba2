#pragma once

#include <heckeforge/multipoly.hpp>
#include <heckeforge/partition.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace heckeforge {

/// Monomial symmetric polynomial m_lambda in N variables: the sum of all
/// distinct permutations of the exponent vector lambda. Zero when lambda has
/// more parts than there are variables.
inline MultiPoly monomial_symmetric(const Partition& lambda, int N) {
    MultiPoly out(N);
    if (static_cast<int>(lambda.length()) > N) return out;
    std::vector<int> e(N, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i)
        e[i] = static_cast<int>(lambda.parts()[i]);
    std::sort(e.begin(), e.end());
    do
        out.add_term(e, 1);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

/// Power sum p_k = x_1^k + ... + x_N^k.
inline MultiPoly power_sum(long k, int N) {
    if (k < 1) throw std::domain_error("power_sum: k must be >= 1");
    MultiPoly out(N);
    for (int j = 0; j < N; ++j) {
        std::vector<int> e(N, 0);
        e[j] = static_cast<int>(k);
        out.add_term(std::move(e), 1);
    }
    return out;
}

/// Product p_lambda = p_{lambda_1} * ... * p_{lambda_l}; the empty partition
/// gives the constant 1.
inline MultiPoly power_sum(const Partition& lambda, int N) {
    MultiPoly out = MultiPoly::constant(N, 1);
    for (long part : lambda.parts()) out *= power_sum(part, N);
    return out;
}

/// Expands a symmetric polynomial over the monomial symmetric basis. Throws
/// if p is not symmetric (the expansion is verified by reconstruction).
inline std::map<Partition, Rational> m_coefficients(const MultiPoly& p) {
    std::map<Partition, Rational> out;
    for (const auto& [e, c] : p.terms()) {
        bool sorted = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] > e[i - 1]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;
        out.emplace(Partition(std::vector<long>(e.begin(), e.end())), c);
    }
    MultiPoly rebuilt(p.nvars());
    for (const auto& [la, c] : out) rebuilt += c * monomial_symmetric(la, p.nvars());
    if (!(rebuilt == p))
        throw std::domain_error("m_coefficients: polynomial is not symmetric");
    return out;
}

/// Exact change-of-basis tables between power sums and monomial symmetric
/// functions for one homogeneous degree, built at N = degree so that every
/// m_lambda survives. Rows/columns are indexed by the `parts` list, which is
/// in ascending lexicographic order (a linear extension of dominance).
struct SymBasisTables {
    long degree = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Rational>> p_in_m; // row la: p_la over {m_mu}
    std::vector<std::vector<Rational>> m_in_p; // row mu: m_mu over {p_la}

    std::size_t index_of(const Partition& la) const {
        auto it = std::lower_bound(parts.begin(), parts.end(), la);
        if (it == parts.end() || !(*it == la))
            throw std::logic_error("SymBasisTables: partition of the wrong degree");
        return static_cast<std::size_t>(it - parts.begin());
    }
};

namespace detail {

/// Exact inverse by Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("invert_matrix: singular basis matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational lead = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace detail

/// Shared per-degree tables; built once and reused (thread-safe).
inline const SymBasisTables& sym_basis_tables(long degree) {
    if (degree < 0) throw std::domain_error("sym_basis_tables: negative degree");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<const SymBasisTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<SymBasisTables>();
    t->degree = degree;
    t->parts = partitions_of(degree);
    std::sort(t->parts.begin(), t->parts.end()); // ascending lexicographic
    const int N = std::max<long>(degree, 1);
    const std::size_t n = t->parts.size();
    t->p_in_m.assign(n, std::vector<Rational>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        auto coeffs = m_coefficients(power_sum(t->parts[r], N));
        for (const auto& [mu, c] : coeffs) t->p_in_m[r][t->index_of(mu)] = c;
    }
    t->m_in_p = detail::invert_matrix(t->p_in_m);
    auto [pos, fresh] = cache.emplace(degree, std::move(t));
    return *pos->second;
}

/// <f, g> under <p_la, p_mu> = alpha^{l(la)} z_la delta, for two homogeneous
/// symmetric functions of the table's degree given by monomial-basis
/// coefficient vectors indexed like `tables.parts`.
inline Rational inner_product_m_vectors(const SymBasisTables& tables,
                                        const std::vector<Rational>& f,
                                        const std::vector<Rational>& g,
                                        const Rational& alpha) {
    if (alpha == 0) throw std::domain_error("inner product: alpha must be nonzero");
    const std::size_t n = tables.parts.size();
    Rational total = 0;
    for (std::size_t la = 0; la < n; ++la) {
        Rational fp = 0, gp = 0;
        for (std::size_t mu = 0; mu < n; ++mu) {
            if (f[mu] != 0) fp += f[mu] * tables.m_in_p[mu][la];
            if (g[mu] != 0) gp += g[mu] * tables.m_in_p[mu][la];
        }
        if (fp == 0 || gp == 0) continue;
        Rational weight = tables.parts[la].z();
        for (std::size_t i = 0; i < tables.parts[la].length(); ++i) weight *= alpha;
        total += fp * gp * weight;
    }
    return total;
}

} // namespace heckeforge
