#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heckeforge {

/// Signature series eta_0, sigma_1, sigma_2, ...; the two associated
/// invariants are the plain and the alternating partial sums. Scalar may be
/// any ring type (exact rationals keep the truncation identity exact).
template <typename Scalar>
struct EtaSeries {
    Scalar eta0{};
    std::vector<Scalar> sigmas; // sigma_1 ... sigma_k (1-indexed semantics)
};

enum class EtaSign { Plus, Minus };

/// eta_0 + sum_{i=1..k} sigma_i (Plus) or eta_0 + sum (-1)^i sigma_i (Minus).
template <typename Scalar>
Scalar eta_partial(const EtaSeries<Scalar>& series, long k, EtaSign sign) {
    if (k < 0 || static_cast<std::size_t>(k) > series.sigmas.size())
        throw std::out_of_range("eta_partial: truncation index out of range");
    Scalar acc = series.eta0;
    for (long i = 1; i <= k; ++i) {
        const Scalar& s = series.sigmas[static_cast<std::size_t>(i - 1)];
        if (sign == EtaSign::Minus && i % 2 == 1)
            acc -= s;
        else
            acc += s;
    }
    return acc;
}

/// A pull generator for sigma terms: each call yields the next term, or
/// nullopt once the sequence is exhausted.
using SigmaGenerator = std::function<std::optional<double>()>;

/// sigma_i = ratio^i.
inline SigmaGenerator geometric_sigmas(double ratio) {
    return [ratio, cur = 1.0]() mutable {
        cur *= ratio;
        return std::optional<double>(cur);
    };
}

/// sigma_i = c for every i.
inline SigmaGenerator constant_sigmas(double c) {
    return [c]() { return std::optional<double>(c); };
}

/// Replays a finite list of terms, then reports exhaustion.
inline SigmaGenerator listed_sigmas(std::vector<double> terms) {
    return [terms = std::move(terms), i = std::size_t{0}]() mutable {
        if (i == terms.size()) return std::optional<double>();
        return std::optional<double>(terms[i++]);
    };
}

struct EtaConvergence {
    bool converged = false;
    long index = 0;     // smallest admissible truncation index when converged
    double partial = 0; // partial sum of the sigmas through `index`
};

/// Scans the sigma sequence for the smallest k <= budget at which both
/// |sigma_k| < tol and the partial sum moved by less than tol. A generator
/// that ends converges at its length (the remaining tail is empty), so the
/// empty sequence converges at index 0; running past the budget without a
/// witness reports divergence.
inline EtaConvergence eta_convergence(const SigmaGenerator& sigmas, double tol, long budget) {
    if (!(tol > 0)) throw std::domain_error("eta_convergence: tol must be > 0");
    if (budget < 0) throw std::domain_error("eta_convergence: budget must be >= 0");
    EtaConvergence out;
    double partial = 0;
    for (long k = 1; k <= budget; ++k) {
        std::optional<double> term = sigmas();
        if (!term) {
            out.converged = true;
            out.index = k - 1;
            out.partial = partial;
            return out;
        }
        const double prev = partial;
        partial += *term;
        if (std::abs(*term) < tol && std::abs(partial - prev) < tol) {
            out.converged = true;
            out.index = k;
            out.partial = partial;
            return out;
        }
    }
    out.converged = false;
    out.index = budget;
    out.partial = partial;
    return out;
}

} // namespace heckeforge
