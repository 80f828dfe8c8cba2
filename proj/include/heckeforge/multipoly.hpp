#pragma once

#include <heckeforge/rational.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heckeforge {

/// Sparse multivariate polynomial in x_1..x_N with exact rational
/// coefficients. Terms map an exponent vector (always of length N) to a
/// nonzero coefficient; the zero polynomial has no terms.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::domain_error("MultiPoly: nvars must be >= 1");
    }

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
        return p;
    }

    /// x_j, 1-based
    static MultiPoly variable(int nvars, int j) {
        MultiPoly p(nvars);
        p.check_index(j);
        Exponents e(nvars, 0);
        e[j - 1] = 1;
        p.terms_.emplace(std::move(e), 1);
        return p;
    }

    static MultiPoly monomial(int nvars, Exponents exps, const Rational& c) {
        MultiPoly p(nvars);
        if (static_cast<int>(exps.size()) != nvars)
            throw std::domain_error("MultiPoly: exponent vector length != nvars");
        for (int e : exps)
            if (e < 0) throw std::domain_error("MultiPoly: negative exponent");
        if (c != 0) p.terms_.emplace(std::move(exps), c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Adds c * x^e, erasing the term if the sum cancels.
    void add_term(Exponents e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void check_index(int j) const {
        if (j < 1 || j > nvars_)
            throw std::domain_error("MultiPoly: variable index out of range");
    }

private:
    void check_same(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::domain_error("MultiPoly: mixed variable counts");
    }

    int nvars_;
    TermMap terms_;
};

/// d/dx_j, 1-based.
inline MultiPoly partial_derivative(const MultiPoly& p, int j) {
    p.check_index(j);
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[j - 1] == 0) continue;
        MultiPoly::Exponents d = e;
        d[j - 1] -= 1;
        out.add_term(std::move(d), c * e[j - 1]);
    }
    return out;
}

} // namespace heckeforge
