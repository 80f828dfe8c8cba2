#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckeforge {

/// Closed real interval [lo, hi]; lo > hi encodes the empty interval.
struct Interval {
    double lo = 0, hi = 0;
    bool empty() const { return lo > hi; }
    double length() const { return empty() ? 0 : hi - lo; }
    bool contains(double x, double tol = 0) const {
        return !empty() && x >= lo - tol && x <= hi + tol;
    }
};

enum class DomainLabel { Picard, Vinberg, Gamma0Picard, Gamma0Vinberg };

inline const char* to_string(DomainLabel l) {
    switch (l) {
        case DomainLabel::Picard: return "picard";
        case DomainLabel::Vinberg: return "vinberg";
        case DomainLabel::Gamma0Picard: return "gamma0-picard";
        default: return "gamma0-vinberg";
    }
}

inline DomainLabel parse_domain_label(const std::string& s) {
    if (s == "picard") return DomainLabel::Picard;
    if (s == "vinberg") return DomainLabel::Vinberg;
    if (s == "gamma0-picard") return DomainLabel::Gamma0Picard;
    if (s == "gamma0-vinberg") return DomainLabel::Gamma0Vinberg;
    throw std::invalid_argument("unknown domain label: '" + s + "'");
}

inline bool is_picard(DomainLabel l) {
    return l == DomainLabel::Picard || l == DomainLabel::Gamma0Picard;
}

/// Desymmetrized box domain [0, x_beta] x [0, 1/2] (or its symmetrized
/// variant [-x_beta, x_beta] x [0, 1/2]).
struct BoxDomain {
    DomainLabel label = DomainLabel::Picard;
    double x_beta = 0.5;
    Interval x_range{0, 0.5};
    Interval y_range{0, 0.5};
    bool symmetric() const { return x_range.lo < 0; }
};

/// A box domain consistent with its label: the Picard groups pin
/// x_beta = 1/2, the Vinberg boxes carry the caption value of x_beta.
inline BoxDomain make_domain(DomainLabel label, double x_beta, bool symmetric = false) {
    if (!(x_beta > 0)) throw std::domain_error("make_domain: x_beta must be > 0");
    if (is_picard(label) && x_beta != 0.5)
        throw std::domain_error("make_domain: the picard domains require x_beta = 1/2");
    BoxDomain d;
    d.label = label;
    d.x_beta = x_beta;
    d.x_range = symmetric ? Interval{-x_beta, x_beta} : Interval{0, x_beta};
    d.y_range = Interval{0, 0.5};
    return d;
}

/// Closed-box membership with tolerance.
inline bool contains(const BoxDomain& d, double x, double y, double tol = 0) {
    if (tol < 0) throw std::domain_error("contains: tol must be >= 0");
    return d.x_range.contains(x, tol) && d.y_range.contains(y, tol);
}

enum class LocusKind { Simplex, Complex };
enum class LocusRule { OddHalfMultiples, AllMultiples, Pair };
enum class LocusAxis { X, Y, U, V };

inline const char* to_string(LocusKind k) {
    return k == LocusKind::Simplex ? "simplex" : "complex";
}
inline const char* to_string(LocusRule r) {
    switch (r) {
        case LocusRule::OddHalfMultiples: return "odd-half-multiples";
        case LocusRule::AllMultiples: return "all-multiples";
        default: return "pair";
    }
}
inline const char* to_string(LocusAxis a) {
    switch (a) {
        case LocusAxis::X: return "x";
        case LocusAxis::Y: return "y";
        case LocusAxis::U: return "u";
        default: return "v";
    }
}

/// Family of parallel grading lines ("cuts") across a domain:
///   odd-half-multiples: positions m'/2 over odd m' = 2m+1 (p is unused);
///   all-multiples:      positions m*p over all integers m;
///   pair:               exactly the two positions +-2p (p plays x_beta).
/// The axis tag names the coordinate the figures use; u aliases x and
/// v aliases y — the geometry itself is planar.
struct GradingLocus {
    LocusKind kind = LocusKind::Simplex;
    LocusRule rule = LocusRule::OddHalfMultiples;
    double p = 1;
    LocusAxis axis = LocusAxis::X;

    static GradingLocus simplex_odd_halves(LocusAxis axis = LocusAxis::U) {
        return {LocusKind::Simplex, LocusRule::OddHalfMultiples, 1.0, axis};
    }
    static GradingLocus complex_multiples(double p, LocusAxis axis = LocusAxis::X) {
        if (!(p > 0)) throw std::domain_error("GradingLocus: period must be > 0");
        return {LocusKind::Complex, LocusRule::AllMultiples, p, axis};
    }
    static GradingLocus complex_pair(double x_beta, LocusAxis axis = LocusAxis::X) {
        if (!(x_beta > 0)) throw std::domain_error("GradingLocus: x_beta must be > 0");
        return {LocusKind::Complex, LocusRule::Pair, x_beta, axis};
    }

    /// True when the axis addresses the first planar coordinate.
    bool horizontal_coordinate() const {
        return axis == LocusAxis::X || axis == LocusAxis::U;
    }

    /// Distance from c to the nearest locus position (rule applied globally).
    double distance(double c) const {
        switch (rule) {
            case LocusRule::OddHalfMultiples: {
                double nearest = std::floor(c) + 0.5;
                return std::min(std::fabs(c - nearest), std::fabs(c - nearest + 1.0));
            }
            case LocusRule::AllMultiples:
                return std::fabs(c - p * std::round(c / p));
            default:
                return std::min(std::fabs(c - 2 * p), std::fabs(c + 2 * p));
        }
    }
};

/// The rule's positions inside the closed window, ascending, no duplicates.
inline std::vector<double> grading_positions(const GradingLocus& l, const Interval& window) {
    std::vector<double> out;
    if (window.empty()) return out;
    switch (l.rule) {
        case LocusRule::OddHalfMultiples: {
            // m'/2 for odd m': first odd half >= lo
            long mp = 2 * static_cast<long>(std::ceil(window.lo - 0.5)) + 1;
            while (mp / 2.0 < window.lo) mp += 2;
            for (; mp / 2.0 <= window.hi; mp += 2) out.push_back(mp / 2.0);
            break;
        }
        case LocusRule::AllMultiples: {
            long m = static_cast<long>(std::ceil(window.lo / l.p));
            while ((m - 1) * l.p >= window.lo) --m; // guard against rounding
            while (m * l.p < window.lo) ++m;
            for (; m * l.p <= window.hi; ++m) out.push_back(m * l.p);
            break;
        }
        default:
            for (double pos : {-2 * l.p, 2 * l.p})
                if (window.contains(pos)) out.push_back(pos);
            break;
    }
    return out;
}

struct UnsupportedGradingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One translated copy of a domain in a grading tiling.
struct Tile {
    double offset = 0;
    BoxDomain box;
};

/// The n=1 grading tiling: copies of d stepped along the x direction by the
/// domain width, keeping every copy that overlaps the window in more than a
/// boundary point. Only n = 1 appears in the source figures; anything else
/// is rejected rather than guessed.
inline std::vector<Tile> tile(const BoxDomain& d, int n, const Interval& window) {
    if (n != 1)
        throw UnsupportedGradingError("tile: only the n=1 grading is defined (got n=" +
                                      std::to_string(n) + ")");
    std::vector<Tile> out;
    if (window.empty()) return out;
    const double w = d.x_range.length();
    if (!(w > 0)) throw std::domain_error("tile: domain has no width");
    const long k_lo = static_cast<long>(std::floor((window.lo - d.x_range.hi) / w)) - 1;
    const long k_hi = static_cast<long>(std::ceil((window.hi - d.x_range.lo) / w)) + 1;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double off = k * w;
        // strict overlap: boundary-only contact does not count as a copy
        if (d.x_range.lo + off < window.hi && d.x_range.hi + off > window.lo) {
            BoxDomain shifted = d;
            shifted.x_range = {d.x_range.lo + off, d.x_range.hi + off};
            out.push_back({off, shifted});
        }
    }
    return out;
}

enum class PointClass { Interior, OnSimplex, OnComplex, Exterior };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Interior: return "interior";
        case PointClass::OnSimplex: return "on-simplex";
        case PointClass::OnComplex: return "on-complex";
        default: return "exterior";
    }
}

/// Classification of a point against a domain and its grading loci. A point
/// is on a locus when the coordinate the locus grades is within tol of one
/// of its positions and the transverse coordinate stays inside the domain's
/// strip (loci extend across the whole tiling, so they reach beyond the box
/// itself — the pair complexes at +-2 x_beta sit outside it by design).
/// Complexes take precedence over simplices. Off every locus, a point is
/// interior or exterior by closed-box membership.
inline PointClass classify_point(const BoxDomain& d, const std::vector<GradingLocus>& loci,
                                 double x, double y, double tol) {
    if (!(tol > 0)) throw std::domain_error("classify_point: tol must be > 0");
    bool on_simplex = false;
    for (const auto& l : loci) {
        const double c = l.horizontal_coordinate() ? x : y;
        const bool transverse_ok = l.horizontal_coordinate()
                                       ? d.y_range.contains(y, tol)
                                       : d.x_range.contains(x, tol);
        if (transverse_ok && l.distance(c) <= tol) {
            if (l.kind == LocusKind::Complex) return PointClass::OnComplex;
            on_simplex = true;
        }
    }
    if (on_simplex) return PointClass::OnSimplex;
    return contains(d, x, y, tol) ? PointClass::Interior : PointClass::Exterior;
}

} // namespace heckeforge
