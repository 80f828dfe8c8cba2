#pragma once

#include <heckeforge/rational.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace heckeforge {

/// Exact point e^{i pi t} on the unit circle, stored by the turn exponent t
/// reduced into [0, 2). Quarter turns (t with denominator 1 or 2) have exact
/// integer real/imaginary parts.
struct UnitRoot {
    Rational turn{0};

    /// Wraps an arbitrary exponent into [0, 2).
    static UnitRoot from_exponent(const Rational& t) {
        const Integer num = numerator(t);
        const Integer den = denominator(t);
        Integer q = num / (2 * den); // toward zero
        if (num < 0 && q * 2 * den != num) --q;
        return UnitRoot{t - 2 * Rational(q)};
    }

    double re() const {
        if (turn == 0) return 1;
        if (turn == Rational(1, 2) || turn == Rational(3, 2)) return 0;
        if (turn == 1) return -1;
        return std::cos(std::numbers::pi * to_double(turn));
    }
    double im() const {
        if (turn == 0 || turn == 1) return 0;
        if (turn == Rational(1, 2)) return 1;
        if (turn == Rational(3, 2)) return -1;
        return std::sin(std::numbers::pi * to_double(turn));
    }
    UnitRoot conjugate() const { return from_exponent(-turn); }

    friend bool operator==(const UnitRoot&, const UnitRoot&) = default;
};

/// The coefficient sequence c_n = e^{i pi s n^2} for n_min <= n <= n_max.
struct FockCoefficients {
    Rational s;
    long n_min = 0;
    long n_max = 0;
    std::vector<UnitRoot> coeffs;

    const UnitRoot& at(long n) const {
        if (n < n_min || n > n_max)
            throw std::out_of_range("FockCoefficients: n outside the stored range");
        return coeffs[static_cast<std::size_t>(n - n_min)];
    }
};

namespace detail {

inline void check_spin(const Rational& s) {
    if (denominator(Rational(2 * s)) != 1)
        throw std::domain_error("spin must be an integer or a half-integer");
}

} // namespace detail

/// Exact unit-circle coefficients c_n = e^{i pi s n^2}. Requires 2s integer
/// (so every coefficient is a fourth root of unity) and n_min <= n_max.
inline FockCoefficients fock_coefficients(const Rational& s, long n_min, long n_max) {
    detail::check_spin(s);
    if (n_min > n_max) throw std::domain_error("fock_coefficients: empty n range");
    FockCoefficients out;
    out.s = s;
    out.n_min = n_min;
    out.n_max = n_max;
    out.coeffs.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (long n = n_min; n <= n_max; ++n)
        out.coeffs.push_back(UnitRoot::from_exponent(s * n * n));
    return out;
}

enum class SpinClass { Bosonic, Fermionic };

/// Integer spin is bosonic (coefficient period divides 2); half-odd-integer
/// spin is fermionic (period 4). Requires 2s integer.
inline SpinClass spin_classification(const Rational& s) {
    detail::check_spin(s);
    return denominator(s) == 1 ? SpinClass::Bosonic : SpinClass::Fermionic;
}

inline std::string_view spin_str(SpinClass c) {
    return c == SpinClass::Bosonic ? "bosonic" : "fermionic";
}

} // namespace heckeforge
