#pragma once

#include <heckeforge/rational.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace heckeforge {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::domain_error("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::domain_error("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long size() const {
        long s = 0;
        for (long p : parts_) s += p;
        return s;
    }

    /// z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i.
    Rational z() const {
        std::map<long, long> mult;
        for (long p : parts_) ++mult[p];
        Rational z = 1;
        for (const auto& [part, m] : mult) {
            for (long t = 0; t < m; ++t) z *= part;
            for (long t = 2; t <= m; ++t) z *= t;
        }
        return z;
    }

    /// "3,1,1"; the empty partition prints as "0".
    std::string str() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (long p : parts_) {
            if (!s.empty()) s += ',';
            s += std::to_string(p);
        }
        return s;
    }

    /// Inverse of str(); also accepts the empty string for the empty partition.
    static Partition parse(std::string_view s) {
        if (s.empty() || s == "0") return Partition();
        std::vector<long> parts;
        std::size_t i = 0;
        while (i <= s.size()) {
            std::size_t j = s.find(',', i);
            if (j == std::string_view::npos) j = s.size();
            try {
                parts.push_back(std::stol(std::string(s.substr(i, j - i))));
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed partition: '" + std::string(s) + "'");
            }
            i = j + 1;
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<long> parts_;
};

/// a dominates b: equal sizes and every prefix sum of a is >= that of b.
/// (Partial order; false does not imply dominates(b, a).)
inline bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    long sa = 0, sb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.length() ? a.parts()[i] : 0;
        sb += i < b.length() ? b.parts()[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

/// All partitions of n with at most max_len parts (no limit if max_len < 0),
/// in descending lexicographic order, starting at (n) and ending at (1^n).
inline std::vector<Partition> partitions_of(long n, long max_len = -1) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long cap) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (max_len >= 0 && static_cast<long>(cur.size()) == max_len) return;
        for (long p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace heckeforge
