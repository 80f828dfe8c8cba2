#pragma once

#include <heckeforge/hecke_word.hpp>

#include <cmath>

namespace heckeforge {

/// Raised when the reduction step budget runs out: a diagnostic for
/// non-discrete lambda or pathological input, not a library bug.
struct ReductionLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionResult {
    HalfPlanePoint reduced;
    HeckeWord word; // g with g(input) = reduced
    int steps = 0;
};

/// Closed fundamental domain F(q) = { |re| <= lambda_q/2, |z| >= 1 }.
inline bool in_fundamental_domain(const HalfPlanePoint& z, double lambda, double tol = 1e-9) {
    return std::fabs(z.re) <= lambda / 2 + tol && std::sqrt(z.abs2()) >= 1 - tol;
}

/// Reduces z into F(q): translate by U^{-k} (one shot, k = round(re/lambda))
/// while |re| > lambda/2, invert by T while |z| < 1. Boundary ties resolve
/// inside at tolerance 1e-9.
inline ReductionResult reduce_point(HalfPlanePoint z, int q, int max_steps = 1000) {
    z.require_interior();
    if (q < 3) throw std::domain_error("reduce_point: q must be >= 3");
    if (max_steps < 1) throw std::domain_error("reduce_point: max_steps must be >= 1");

    const double lambda = number_field(q)->lambda();
    const double tol = 1e-9;
    HeckeWord word(q);
    int steps = 0;

    while (true) {
        if (std::fabs(z.re) > lambda / 2 + tol) {
            if (steps >= max_steps)
                throw ReductionLimitError("reduce_point: step budget exhausted");
            long k = std::lround(z.re / lambda);
            if (k == 0) k = z.re > 0 ? 1 : -1;
            z.re -= static_cast<double>(k) * lambda;
            // U^-1 = S^(q-1) T, U = T S
            std::vector<Syllable> piece;
            for (long i = 0; i < std::labs(k); ++i) {
                if (k > 0) {
                    piece.push_back(Syllable::S(q - 1));
                    piece.push_back(Syllable::T());
                } else {
                    piece.push_back(Syllable::T());
                    piece.push_back(Syllable::S(1));
                }
            }
            word = word_multiply(HeckeWord(q, piece), word);
            ++steps;
        } else if (std::sqrt(z.abs2()) < 1 - tol) {
            if (steps >= max_steps)
                throw ReductionLimitError("reduce_point: step budget exhausted");
            const double n = z.abs2();
            z = HalfPlanePoint(-z.re / n, z.im / n);
            word = word_multiply(HeckeWord(q, {Syllable::T()}), word);
            ++steps;
        } else {
            break;
        }
    }
    return {z, word, steps};
}

} // namespace heckeforge
