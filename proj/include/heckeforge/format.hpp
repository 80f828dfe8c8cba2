#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace heckeforge {

/// Shortest decimal with at most 12 significant digits that parses back to
/// the same double; falls back to the full 12 digits when no shorter form
/// round-trips. Exponents are canonicalized ("1e+06" -> "1e6") and negative
/// zero prints as "0", so equal values always format identically.
inline std::string format_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("format_double: value is not finite");
    if (x == 0) return "0";
    char buf[48];
    if (x == std::floor(x) && std::fabs(x) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    std::string best;
    for (int prec = 1; prec <= 12; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        best = buf;
        if (std::strtod(buf, nullptr) == x) break;
    }
    // canonicalize the exponent part, if any
    auto e = best.find('e');
    if (e != std::string::npos) {
        std::string mant = best.substr(0, e);
        std::string exp = best.substr(e + 1);
        bool neg = false;
        std::size_t i = 0;
        if (i < exp.size() && (exp[i] == '+' || exp[i] == '-')) neg = exp[i++] == '-';
        while (i + 1 < exp.size() && exp[i] == '0') ++i;
        best = mant + "e" + (neg ? "-" : "") + exp.substr(i);
    }
    return best;
}

/// Minimal JSON document builder with insertion-ordered object keys and
/// format_double for every number, so identical invocations serialize to
/// identical bytes.
class Json {
public:
    Json() : value_(nullptr) {}
    Json(std::nullptr_t) : value_(nullptr) {}
    Json(bool b) : value_(b) {}
    Json(int v) : value_(static_cast<long long>(v)) {}
    Json(long v) : value_(static_cast<long long>(v)) {}
    Json(long long v) : value_(v) {}
    Json(std::size_t v) : value_(static_cast<long long>(v)) {}
    Json(double v) : value_(v) {}
    Json(const char* s) : value_(std::string(s)) {}
    Json(std::string s) : value_(std::move(s)) {}

    static Json array() {
        Json j;
        j.value_ = Array{};
        return j;
    }
    static Json object() {
        Json j;
        j.value_ = Object{};
        return j;
    }

    Json& push_back(Json v) {
        std::get<Array>(value_).push_back(std::move(v));
        return *this;
    }
    Json& set(std::string key, Json v) {
        std::get<Object>(value_).emplace_back(std::move(key), std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    struct Array : std::vector<Json> {};
    struct Object : std::vector<std::pair<std::string, Json>> {};
    std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> value_;

    static void write_string(std::string& out, const std::string& s) {
        out += '"';
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        if (std::holds_alternative<std::nullptr_t>(value_)) {
            out += "null";
        } else if (auto* b = std::get_if<bool>(&value_)) {
            out += *b ? "true" : "false";
        } else if (auto* i = std::get_if<long long>(&value_)) {
            out += std::to_string(*i);
        } else if (auto* d = std::get_if<double>(&value_)) {
            out += format_double(*d);
        } else if (auto* s = std::get_if<std::string>(&value_)) {
            write_string(out, *s);
        } else if (auto* a = std::get_if<Array>(&value_)) {
            out += '[';
            for (std::size_t k = 0; k < a->size(); ++k) {
                if (k) out += ',';
                (*a)[k].write(out);
            }
            out += ']';
        } else {
            const auto& o = std::get<Object>(value_);
            out += '{';
            for (std::size_t k = 0; k < o.size(); ++k) {
                if (k) out += ',';
                write_string(out, o[k].first);
                out += ':';
                o[k].second.write(out);
            }
            out += '}';
        }
    }
};

} // namespace heckeforge
