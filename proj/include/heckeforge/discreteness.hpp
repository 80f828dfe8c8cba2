#pragma once

#include <heckeforge/halfplane.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heckeforge {

enum class ProbeVerdict { DiscreteConsistent, AccumulationDetected, Inconclusive };

inline const char* to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::DiscreteConsistent: return "discrete-consistent";
        case ProbeVerdict::AccumulationDetected: return "accumulation-detected";
        default: return "inconclusive";
    }
}

struct ProbeWitness {
    std::string word1, word2;         // "U^2 T U^-1" style
    std::array<double, 4> mat1, mat2; // row-major (a b c d)
    double image_distance = 0;        // hyperbolic distance between the images of i
    double matrix_distance = 0;       // projective sup distance between the matrices
    // orbit-pair: two words with close images; identity-recurrence: word2 is a
    // power of TU that returned near the projective identity without being it
    enum class Kind { OrbitPair, IdentityRecurrence } kind = Kind::OrbitPair;
};

struct ProbeResult {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    std::size_t words_examined = 0;
    bool exhaustive = false;
    std::optional<ProbeWitness> witness;
};

namespace detail {

struct ProbeEntry {
    std::array<double, 4> m; // a b c d, det 1
    double re, im;           // image of i
    std::vector<int> word;   // 0 = T, nonzero k = U^k
};

inline std::string probe_word_str(const std::vector<int>& w) {
    std::string out;
    for (int s : w) {
        if (!out.empty()) out += ' ';
        if (s == 0) out += 'T';
        else if (s == 1) out += 'U';
        else out += "U^" + std::to_string(s);
    }
    return out;
}

inline double projective_matrix_distance(const std::array<double, 4>& a,
                                         const std::array<double, 4>& b) {
    double dp = 0, dm = 0;
    for (int i = 0; i < 4; ++i) {
        dp = std::max(dp, std::fabs(a[i] - b[i]));
        dm = std::max(dm, std::fabs(a[i] + b[i]));
    }
    return std::min(dp, dm);
}

/// Does the unit-determinant matrix q lie (projectively, within tol) in the
/// stabilizer of the basepoint i inside the group, {1, T}?
inline bool near_basepoint_stabilizer(const std::array<double, 4>& q, double tol) {
    const std::array<double, 4> eye{1, 0, 0, 1}, rot{0, -1, 1, 0};
    return projective_matrix_distance(q, eye) < tol ||
           projective_matrix_distance(q, rot) < tol;
}

} // namespace detail

/// Empirical discreteness probe for H(lambda) = <T, U>, U(z) = z + lambda.
///
/// A subgroup of PSL(2,R) is discrete exactly when the identity is isolated
/// in it, and the probe looks for empirical violations of that through two
/// families of words.
///
/// Identity recurrence: powers of S = TU are scanned for a return to within
/// eps of +-I that is not +-I itself. S is elliptic for lambda < 2, so its
/// powers have bounded entries and the scan is numerically benign; when the
/// rotation angle is an irrational multiple of pi the powers are dense and a
/// recurrence eventually appears, while for lambda = 2 cos(pi/q) the powers
/// cycle through finitely many matrices and the scan ends at the exact
/// return S^q = -I (which is the identity, hence no witness). Entries
/// growing past 1e4 mean a non-elliptic S diverging monotonically, so the
/// scan also ends there; elliptic powers stay below that bound for every
/// lambda <= 1.999.
///
/// Orbit pairs: the alternating words in T and U^m (0 < |m| <= max_shift) of
/// up to word_length syllables are applied to the basepoint i. A pair of
/// words witnesses an accumulation when their images of i lie within eps of
/// each other in the hyperbolic metric while the words differ projectively
/// by more than eps as real matrices *and* their quotient does not stabilize
/// i. The stabilizer exclusion is what makes the criterion sound: relations
/// in a discrete group produce plenty of distinct matrices g and g.T with
/// exactly equal images, and those pairs say nothing about discreteness.
///
/// The verdict is never a proof: discrete-consistent only means both
/// families were exhausted without a witness. sample_count caps each
/// family; if the orbit enumeration exceeds it, a seeded pseudo-random
/// subsample is used, and if either family is cut short a witness-free
/// outcome is reported as inconclusive rather than discrete-consistent.
inline ProbeResult discreteness_probe(double lambda, int word_length, long sample_count,
                                      double eps, std::uint64_t seed = 0x48454b45u,
                                      int max_shift = 3) {
    if (!(lambda > 0)) throw std::domain_error("discreteness_probe: lambda must be > 0");
    if (!(eps > 0)) throw std::domain_error("discreteness_probe: eps must be > 0");
    if (word_length < 1) throw std::domain_error("discreteness_probe: word_length must be >= 1");
    if (sample_count < 1) throw std::domain_error("discreteness_probe: sample_count must be >= 1");
    if (max_shift < 1) throw std::domain_error("discreteness_probe: max_shift must be >= 1");

    const int kMaxShift = max_shift;
    // Conditioning window: keeps every matrix entry below ~1e4 so that the
    // quotient test stays far above double rounding noise. Hyperbolically
    // this is an enormous ball around i, not a tight viewport.
    constexpr double kImFloor = 1e-4, kImCeil = 1e4, kReCap = 100.0;
    constexpr double kStabTol = 1e-6;

    ProbeResult result;

    // --- identity recurrence scan over powers of S = TU ---
    const long power_cap = std::min<long>(sample_count, 1L << 20);
    constexpr double kExactTol = 1e-9; // closer than this is the identity itself
    constexpr double kNormCap = 1e4;   // a non-elliptic S diverges monotonically past this
    bool power_scan_complete = false;
    {
        const std::array<double, 4> s{0, -1, 1, lambda};
        std::array<double, 4> p = s;
        const std::array<double, 4> eye{1, 0, 0, 1};
        for (long k = 1; k <= power_cap; ++k) {
            if (k > 1)
                p = {p[0] * s[0] + p[1] * s[2], p[0] * s[1] + p[1] * s[3],
                     p[2] * s[0] + p[3] * s[2], p[2] * s[1] + p[3] * s[3]};
            ++result.words_examined;
            const double norm =
                std::max(std::max(std::fabs(p[0]), std::fabs(p[1])),
                         std::max(std::fabs(p[2]), std::fabs(p[3])));
            if (norm > kNormCap) { // diverging, no recurrence ahead
                power_scan_complete = true;
                break;
            }
            const double d = detail::projective_matrix_distance(p, eye);
            if (d < kExactTol) { // exact finite order: periodic from here on
                power_scan_complete = true;
                break;
            }
            if (d < eps) {
                const double den = p[2] * p[2] + p[3] * p[3];
                const double im = 1.0 / den;
                const double re = (p[1] * p[3] + p[0] * p[2]) / den;
                const double d2 = re * re + (im - 1.0) * (im - 1.0);
                ProbeWitness w;
                w.word1 = "1";
                w.word2 = "(T U)^" + std::to_string(k);
                w.mat1 = eye;
                w.mat2 = p;
                w.image_distance = std::acosh(1.0 + d2 / (2.0 * im));
                w.matrix_distance = d;
                w.kind = ProbeWitness::Kind::IdentityRecurrence;
                result.witness = std::move(w);
                power_scan_complete = true;
                break;
            }
        }
    }

    // Depth-first enumeration of alternating words with incremental matrices.
    std::vector<detail::ProbeEntry> all;
    struct Frame {
        std::array<double, 4> m;
        std::vector<int> word;
        bool last_T;
    };
    std::vector<Frame> stack;
    stack.push_back({{1, 0, 0, 1}, {}, false});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!f.word.empty()) {
            const auto& m = f.m;
            double den = m[2] * m[2] + m[3] * m[3];
            double im = 1.0 / den;
            double re = (m[1] * m[3] + m[0] * m[2]) / den;
            if (im >= kImFloor && im <= kImCeil && std::fabs(re) <= kReCap)
                all.push_back({f.m, re, im, f.word});
        }
        if (static_cast<int>(f.word.size()) == word_length) continue;
        // children: right-multiply by the next syllable, alternating kinds
        if (!f.last_T) {
            // M * T with T = [[0,-1],[1,0]]
            Frame g;
            g.m = {f.m[1], -f.m[0], f.m[3], -f.m[2]};
            g.word = f.word;
            g.word.push_back(0);
            g.last_T = true;
            stack.push_back(std::move(g));
        }
        if (f.last_T || f.word.empty()) {
            for (int m = -kMaxShift; m <= kMaxShift; ++m) {
                if (m == 0) continue;
                // M * U^m with U^m = [[1, m*lambda],[0,1]]
                Frame g;
                g.m = {f.m[0], f.m[0] * (m * lambda) + f.m[1], f.m[2],
                       f.m[2] * (m * lambda) + f.m[3]};
                g.word = f.word;
                g.word.push_back(m);
                g.last_T = false;
                stack.push_back(std::move(g));
            }
        }
    }

    bool exhaustive = true;
    if (static_cast<long>(all.size()) > sample_count) {
        exhaustive = false;
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(sample_count));
    }

    result.words_examined += all.size();
    result.exhaustive = exhaustive && power_scan_complete;

    // Points within hyperbolic distance eps have im ratio at most e^eps, so
    // after sorting by im only a narrow band of followers can pair with each
    // entry. Sorting is by value (ties broken by the word itself), so the
    // first witness found is deterministic.
    std::sort(all.begin(), all.end(), [](const detail::ProbeEntry& x, const detail::ProbeEntry& y) {
        if (x.im != y.im) return x.im < y.im;
        if (x.re != y.re) return x.re < y.re;
        return x.word < y.word;
    });
    // d_hyp(z, w) < eps  <=>  |z - w|^2 < 2 (cosh eps - 1) im(z) im(w)
    const double prox = 2.0 * (std::cosh(eps) - 1.0);
    const double ratio = std::exp(eps) * (1 + 1e-12);

    for (std::size_t i = 0; i + 1 < all.size() && !result.witness; ++i) {
        const auto& p = all[i];
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& r = all[j];
            if (r.im > p.im * ratio) break;
            const double dre = p.re - r.re, dim = p.im - r.im;
            const double d2 = dre * dre + dim * dim;
            if (d2 >= prox * p.im * r.im) continue;
            const double mdist = detail::projective_matrix_distance(p.m, r.m);
            if (mdist <= eps) continue;
            // quotient p.m^-1 * r.m via the adjugate (det = 1)
            const std::array<double, 4> q{p.m[3] * r.m[0] - p.m[1] * r.m[2],
                                          p.m[3] * r.m[1] - p.m[1] * r.m[3],
                                          p.m[0] * r.m[2] - p.m[2] * r.m[0],
                                          p.m[0] * r.m[3] - p.m[2] * r.m[1]};
            if (detail::near_basepoint_stabilizer(q, kStabTol)) continue;
            const double dhyp = std::acosh(1.0 + d2 / (2.0 * p.im * r.im));
            result.witness = ProbeWitness{detail::probe_word_str(p.word),
                                          detail::probe_word_str(r.word), p.m, r.m,
                                          dhyp, mdist};
            break;
        }
    }

    if (result.witness)
        result.verdict = ProbeVerdict::AccumulationDetected;
    else
        result.verdict = result.exhaustive ? ProbeVerdict::DiscreteConsistent
                                           : ProbeVerdict::Inconclusive;
    return result;
}

} // namespace heckeforge
