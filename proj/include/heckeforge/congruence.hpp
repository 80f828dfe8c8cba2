#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace heckeforge {

/// Invariants of the level-N congruence subgroup Gamma_0(N) of the modular
/// group and of the curve X_0(N) it uniformizes.
struct Gamma0Data {
    long N = 1;
    long index = 1; // mu = [PSL(2,Z) : Gamma_0(N)]
    long nu2 = 1;   // order-2 elliptic points
    long nu3 = 1;   // order-3 elliptic points
    long cusps = 1; // nu_infinity
    long genus = 0;

    friend bool operator==(const Gamma0Data&, const Gamma0Data&) = default;
};

namespace detail {

inline long mod_gcd3(long a, long b, long n) { return std::gcd(std::gcd(a, b), n); }

/// a^-1 mod n for gcd(a, n) = 1, result in [0, n)
inline long mod_inverse(long a, long n) {
    long r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return ((s0 % n) + n) % n;
}

} // namespace detail

/// Index, elliptic-point counts, cusp count, and genus for Gamma_0(N).
/// The elliptic counts are direct residue enumerations (solutions of
/// a^2 + 1 = 0 and a^2 + a + 1 = 0 mod N), which keeps them honest at the
/// awkward primes 2 and 3; the genus comes from the exact rational identity
/// g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2.
inline Gamma0Data gamma0_invariants(long N) {
    if (N < 1) throw std::domain_error("gamma0_invariants: N must be >= 1");
    Gamma0Data d;
    d.N = N;

    // mu = N * prod_{p | N} (1 + 1/p), exactly in integers
    d.index = N;
    long m = N;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        d.index = d.index / p * (p + 1);
        while (m % p == 0) m /= p;
    }
    if (m > 1) d.index = d.index / m * (m + 1);

    d.nu2 = 0;
    d.nu3 = 0;
    for (long a = 0; a < N; ++a) {
        if ((a * a + 1) % N == 0) ++d.nu2;
        if ((a * a + a + 1) % N == 0) ++d.nu3;
    }

    d.cusps = 0;
    for (long div = 1; div <= N; ++div) {
        if (N % div != 0) continue;
        long g = std::gcd(div, N / div);
        long phi = 0;
        for (long a = 1; a <= g; ++a)
            if (std::gcd(a, g) == 1) ++phi;
        d.cusps += phi;
    }

    const long twelve_g = 12 + d.index - 3 * d.nu2 - 4 * d.nu3 - 6 * d.cusps;
    if (twelve_g % 12 != 0)
        throw std::logic_error("gamma0_invariants: genus formula returned a non-integer");
    d.genus = twelve_g / 12;
    if (d.genus < 0)
        throw std::logic_error("gamma0_invariants: negative genus");
    return d;
}

/// Right-coset representatives of Gamma_0(N) in SL(2, Z/N), one per point of
/// the projective line over Z/N. Each representative is the matrix
/// [[a, b], [c, d]] (row-major) with det = 1 mod N whose bottom row is the
/// lexicographically smallest (c, d) in its unit-scaling class; output is in
/// lexicographic bottom-row order. N = 1 returns the identity.
inline std::vector<std::array<long, 4>> coset_reps(long N) {
    if (N < 1) throw std::domain_error("coset_reps: N must be >= 1");
    if (N == 1) return {{1, 0, 0, 1}};

    std::vector<long> units;
    for (long u = 1; u < N; ++u)
        if (std::gcd(u, N) == 1) units.push_back(u);

    std::vector<std::array<long, 4>> reps;
    std::vector<bool> seen(static_cast<std::size_t>(N) * N, false);
    for (long c = 0; c < N; ++c) {
        for (long d = 0; d < N; ++d) {
            if (seen[static_cast<std::size_t>(c) * N + d]) continue;
            if (detail::mod_gcd3(c, d, N) != 1) continue;
            // scanning in lexicographic order makes this the canonical rep
            for (long u : units)
                seen[static_cast<std::size_t>(u * c % N) * N + u * d % N] = true;
            // complete (c, d) to a determinant-1 matrix: with s*d + t*c =
            // gcd(c, d) from the extended Euclid, a = s/g and b = -t/g mod N
            long g = std::gcd(c, d);
            long r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                long q = r0 / r1;
                r0 -= q * r1;
                std::swap(r0, r1);
                s0 -= q * s1;
                std::swap(s0, s1);
                t0 -= q * t1;
                std::swap(t0, t1);
            }
            const long ginv = detail::mod_inverse(g, N);
            const long a = ((s0 * ginv) % N + N) % N;
            const long b = ((-t0 * ginv) % N + N) % N;
            reps.push_back({a, b, c, d});
        }
    }
    return reps;
}

/// All N <= N_max with genus(X_0(N)) = target_g, ascending. Out-of-range
/// arguments simply yield an empty list.
inline std::vector<long> classify_genus(long N_max, long target_g) {
    std::vector<long> out;
    if (target_g < 0) return out;
    for (long N = 1; N <= N_max; ++N)
        if (gamma0_invariants(N).genus == target_g) out.push_back(N);
    return out;
}

} // namespace heckeforge
