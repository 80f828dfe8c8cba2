#pragma once

#include <heckeforge/multipoly.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace heckeforge {

/// Parses "3*x1^2*x2 - 1/2*x3" style polynomial expressions: terms joined by
/// + or -, each term a '*'-separated product of rational constants and
/// variable powers x1..xN (exponent via ^, nonnegative integer).
inline MultiPoly parse_poly(std::string_view src, int nvars) {
    MultiPoly out(nvars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("malformed polynomial at offset " +
                                    std::to_string(i) + ": " + why);
    };
    auto read_uint = [&]() -> long {
        std::size_t start = i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i == start) fail("expected a number");
        try {
            return std::stol(std::string(src.substr(start, i - start)));
        } catch (const std::out_of_range&) {
            fail("number too large");
        }
        return 0; // unreachable
    };

    skip_ws();
    if (i == src.size()) fail("empty expression");
    bool first = true;
    while (i < src.size()) {
        Rational sign = 1;
        skip_ws();
        if (src[i] == '+' || src[i] == '-') {
            if (src[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected + or - between terms");
        }
        first = false;

        Rational coeff = sign;
        MultiPoly::Exponents exps(nvars, 0);
        bool factor_seen = false;
        bool after_star = false;
        for (;;) {
            if (i >= src.size()) {
                if (after_star) fail("dangling *");
                break;
            }
            char c = src[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                long num = read_uint();
                Rational f(num);
                if (i < src.size() && src[i] == '/') {
                    ++i;
                    long den = read_uint();
                    if (den == 0) fail("zero denominator");
                    f = Rational(num, den);
                }
                coeff *= f;
                factor_seen = true;
            } else if (c == 'x') {
                ++i;
                long j = read_uint();
                if (j < 1 || j > nvars) fail("variable index out of range");
                long e = 1;
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    e = read_uint();
                }
                exps[j - 1] += static_cast<int>(e);
                factor_seen = true;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            after_star = false;
            std::size_t before_ws = i;
            skip_ws();
            if (i < src.size() && src[i] == '*') {
                ++i;
                skip_ws();
                after_star = true;
                continue;
            }
            i = before_ws; // a following +/- (after ws) belongs to the next term
            break;
        }
        if (!factor_seen) fail("empty term");
        out.add_term(std::move(exps), coeff);
        skip_ws();
    }
    return out;
}

/// Canonical rendering accepted verbatim by parse_poly: terms in descending
/// lexicographic exponent order, "p/q" coefficients, ^1 and unit
/// coefficients omitted. The zero polynomial prints as "0".
inline std::string poly_str(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";

        std::string factors;
        for (int j = 0; j < p.nvars(); ++j) {
            if (e[j] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += "x" + std::to_string(j + 1);
            if (e[j] != 1) factors += "^" + std::to_string(e[j]);
        }
        const Rational mag = negative ? Rational(-c) : c;
        if (factors.empty())
            out += rational_str(mag);
        else if (mag == 1)
            out += factors;
        else
            out += rational_str(mag) + "*" + factors;
    }
    return out;
}

} // namespace heckeforge
