#pragma once

#include <heckeforge/symfunc.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace heckeforge {

/// <p_lambda, p_mu>_alpha = alpha^{l(lambda)} z_lambda delta_{lambda,mu}.
inline Rational inner_product_alpha(const Partition& lambda, const Partition& mu,
                                    const Rational& alpha) {
    if (alpha == 0) throw std::domain_error("inner_product_alpha: alpha must be nonzero");
    if (!(lambda == mu)) return 0;
    Rational r = lambda.z();
    for (std::size_t i = 0; i < lambda.length(); ++i) r *= alpha;
    return r;
}

/// Monomial-basis coefficient rows of every Jack polynomial of one degree:
/// row k holds P_{parts[k]} over {m_{parts[j]}}, indexed like
/// sym_basis_tables(degree).parts. Built by Gram-Schmidt in ascending
/// lexicographic order (a linear extension of dominance, so the result is
/// the dominance-triangular orthogonal family); cached per (degree, alpha).
inline const std::vector<std::vector<Rational>>& jack_basis_rows(long degree,
                                                                 const Rational& alpha) {
    if (alpha <= 0) throw std::domain_error("jack polynomials need alpha > 0");
    static std::mutex mu;
    static std::map<std::pair<long, Rational>, std::unique_ptr<const std::vector<std::vector<Rational>>>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(degree, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const SymBasisTables& tables = sym_basis_tables(degree);
    const std::size_t n = tables.parts.size();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, 0));
    std::vector<Rational> norms(n);
    for (std::size_t k = 0; k < n; ++k) {
        rows[k][k] = 1; // start from m_{parts[k]}
        for (std::size_t j = 0; j < k; ++j) {
            const Rational overlap =
                inner_product_m_vectors(tables, rows[k], rows[j], alpha);
            if (overlap == 0) continue;
            const Rational f = overlap / norms[j];
            for (std::size_t t = 0; t <= j; ++t) rows[k][t] -= f * rows[j][t];
        }
        norms[k] = inner_product_m_vectors(tables, rows[k], rows[k], alpha);
        if (norms[k] == 0)
            throw std::logic_error("jack_basis_rows: degenerate inner product");
    }
    auto [pos, fresh] = cache.emplace(std::move(key),
                                      std::make_unique<const std::vector<std::vector<Rational>>>(
                                          std::move(rows)));
    return *pos->second;
}

/// Monomial-basis coefficients of P_lambda (variable-count independent:
/// instantiating at N just drops partitions longer than N).
inline std::map<Partition, Rational> jack_coefficients(const Partition& lambda,
                                                       const Rational& alpha) {
    const SymBasisTables& tables = sym_basis_tables(lambda.size());
    const auto& rows = jack_basis_rows(lambda.size(), alpha);
    const std::size_t k = tables.index_of(lambda);
    std::map<Partition, Rational> out;
    for (std::size_t j = 0; j < tables.parts.size(); ++j)
        if (rows[k][j] != 0) out.emplace(tables.parts[j], rows[k][j]);
    return out;
}

/// The Jack polynomial P^alpha_lambda in N variables.
inline MultiPoly jack_polynomial(const Partition& lambda, const Rational& alpha, int N) {
    if (N < 1) throw std::domain_error("jack_polynomial: N must be >= 1");
    if (static_cast<int>(lambda.length()) > N)
        throw std::domain_error("jack_polynomial: partition has more parts than variables");
    if (alpha <= 0) throw std::domain_error("jack_polynomial: alpha must be > 0");
    MultiPoly out(N);
    for (const auto& [mu, c] : jack_coefficients(lambda, alpha))
        out += c * monomial_symmetric(mu, N);
    return out;
}

/// Exact expansion of a symmetric polynomial over the Jack basis:
/// p = sum_lambda c_lambda P^alpha_lambda, over partitions with at most N
/// parts. Throws if p is not symmetric or exceeds the degree bound.
inline std::map<Partition, Rational> jack_expand(const MultiPoly& p, const Rational& alpha,
                                                 long max_degree = 16) {
    if (alpha <= 0) throw std::domain_error("jack_expand: alpha must be > 0");
    if (p.degree() > max_degree)
        throw std::domain_error("jack_expand: degree exceeds the configured bound");
    const int N = p.nvars();
    auto mcoeffs = m_coefficients(p); // throws unless symmetric

    // split by homogeneous degree, then back-substitute against the
    // lex-triangular Jack rows restricted to partitions with <= N parts
    std::map<long, std::map<Partition, Rational>> by_degree;
    for (const auto& [la, c] : mcoeffs) by_degree[la.size()][la] = c;

    std::map<Partition, Rational> out;
    for (auto& [d, residual] : by_degree) {
        const SymBasisTables& tables = sym_basis_tables(d);
        const auto& rows = jack_basis_rows(d, alpha);
        for (std::size_t k = tables.parts.size(); k-- > 0;) {
            const Partition& la = tables.parts[k];
            if (static_cast<int>(la.length()) > N) continue;
            auto it = residual.find(la);
            if (it == residual.end() || it->second == 0) continue;
            const Rational c = it->second;
            for (std::size_t j = 0; j <= k; ++j) {
                if (rows[k][j] == 0) continue;
                // m_mu vanishes at N variables when mu is longer than N, so
                // only the surviving part of the Jack row is subtracted
                if (static_cast<int>(tables.parts[j].length()) > N) continue;
                residual[tables.parts[j]] -= c * rows[k][j];
            }
            out.emplace(la, c);
        }
        for (const auto& [la, c] : residual)
            if (c != 0)
                throw std::logic_error("jack_expand: residual after triangular solve");
    }
    return out;
}

} // namespace heckeforge
