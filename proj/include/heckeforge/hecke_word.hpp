#pragma once

#include <heckeforge/moebius.hpp>

#include <sstream>
#include <vector>

namespace heckeforge {

/// One syllable of a Hecke group word: T when k == 0, else S^k, 1 <= k <= q-1.
struct Syllable {
    int k = 0;
    bool is_T() const { return k == 0; }
    static Syllable T() { return {0}; }
    static Syllable S(int k) { return {k}; }
    bool operator==(const Syllable&) const = default;
};

/// Element of H(lambda_q) = <T | T^2> * <S | S^q> in Kurosh normal form:
/// syllables alternate between the two factors and none is the identity.
/// The empty word is the unit; length() is the syllable count l(g).
class HeckeWord {
public:
    explicit HeckeWord(int q) : q_(q) {
        if (q < 3) throw std::domain_error("HeckeWord: q must be >= 3");
    }

    /// Normalizes an arbitrary syllable stream (cancellation at every junction).
    HeckeWord(int q, const std::vector<Syllable>& raw) : HeckeWord(q) {
        for (const auto& s : raw) push(s);
    }

    int q() const { return q_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    std::size_t length() const { return syl_.size(); }
    bool is_identity() const { return syl_.empty(); }

    bool operator==(const HeckeWord& o) const { return q_ == o.q_ && syl_ == o.syl_; }

    friend HeckeWord word_multiply(const HeckeWord& w1, const HeckeWord& w2) {
        if (w1.q_ != w2.q_) throw std::domain_error("word_multiply: q mismatch");
        HeckeWord out = w1;
        for (const auto& s : w2.syl_) out.push(s);
        return out;
    }

    friend HeckeWord word_inverse(const HeckeWord& w) {
        HeckeWord out(w.q_);
        out.syl_.reserve(w.syl_.size());
        for (auto it = w.syl_.rbegin(); it != w.syl_.rend(); ++it)
            out.syl_.push_back(it->is_T() ? Syllable::T() : Syllable::S(w.q_ - it->k));
        return out;
    }

    /// The defining representation: T -> [[0,-1],[1,0]], S -> [[0,-1],[1,lambda]].
    /// A homomorphism up to the projective sign.
    MoebiusMap to_matrix() const {
        auto f = number_field(q_);
        MoebiusMap m = MoebiusMap::identity(f);
        const MoebiusMap t = MoebiusMap::T(f);
        std::vector<MoebiusMap> s_pow; // s_pow[k-1] = S^k, built on demand
        s_pow.push_back(MoebiusMap::S(f));
        for (const auto& syl : syl_) {
            if (syl.is_T()) {
                m = MoebiusMap::compose(m, t);
            } else {
                while (static_cast<int>(s_pow.size()) < syl.k)
                    s_pow.push_back(MoebiusMap::compose(s_pow.back(), s_pow.front()));
                m = MoebiusMap::compose(m, s_pow[syl.k - 1]);
            }
        }
        return m;
    }

    /// "T S^2 T S"; the empty string is the unit. S^1 prints as "S".
    std::string str() const {
        std::string out;
        for (const auto& s : syl_) {
            if (!out.empty()) out += ' ';
            if (s.is_T()) out += 'T';
            else if (s.k == 1) out += 'S';
            else out += "S^" + std::to_string(s.k);
        }
        return out;
    }

    /// Parses space-separated syllables ("T", "S", "S^k"); the result is
    /// normalized, so arbitrary exponents (including negative) are accepted.
    static HeckeWord parse(int q, const std::string& text) {
        HeckeWord out(q);
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok == "T") {
                out.push(Syllable::T());
            } else if (tok == "S") {
                out.push(Syllable::S(1));
            } else if (tok.rfind("S^", 0) == 0) {
                int k = 0;
                try {
                    k = std::stoi(tok.substr(2));
                } catch (const std::exception&) {
                    throw std::invalid_argument("malformed syllable: '" + tok + "'");
                }
                k %= q;
                if (k < 0) k += q;
                if (k != 0) out.push(Syllable::S(k));
            } else {
                throw std::invalid_argument("malformed syllable: '" + tok + "'");
            }
        }
        return out;
    }

private:
    /// Appends one syllable, keeping normal form (merging happens only at the
    /// junction; a cancellation may expose the previous junction).
    void push(Syllable s) {
        if (s.is_T()) {
            if (!syl_.empty() && syl_.back().is_T()) syl_.pop_back();
            else syl_.push_back(s);
            return;
        }
        int k = s.k % q_;
        if (k < 0) k += q_;
        if (k == 0) return;
        if (!syl_.empty() && !syl_.back().is_T()) {
            int m = (syl_.back().k + k) % q_;
            syl_.pop_back();
            if (m != 0) syl_.push_back(Syllable::S(m));
            return;
        }
        syl_.push_back(Syllable::S(k));
    }

    int q_;
    std::vector<Syllable> syl_;
};

inline MoebiusMap word_to_matrix(const HeckeWord& w) { return w.to_matrix(); }

} // namespace heckeforge
