#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heckeforge {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p", "-p" or "p/q" with nonzero q.
inline std::optional<Rational> try_parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(s)));
        Integer num(std::string(s.substr(0, slash)));
        Integer den(std::string(s.substr(slash + 1)));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline Rational parse_rational(std::string_view s) {
    auto r = try_parse_rational(s);
    if (!r) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    return *r;
}

/// Canonical form: "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace heckeforge
