#pragma once

#include <heckeforge/rational.hpp>

#include <map>
#include <mutex>
#include <vector>

namespace heckeforge {

/// Dense univariate polynomial over the rationals, coefficient 0 first.
/// The zero polynomial is the empty vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(Rational v) { return QPoly({std::move(v)}); }
    static QPoly x() { return QPoly({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& leading() const { return c_.back(); }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    bool operator==(const QPoly& o) const = default;

    QPoly operator+(const QPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return QPoly(std::move(r));
    }
    QPoly operator-(const QPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return QPoly(std::move(r));
    }
    QPoly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v = -v;
        return QPoly(std::move(r));
    }
    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(r));
    }
    QPoly operator*(const Rational& k) const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v *= k;
        return QPoly(std::move(r));
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d. Requires d != 0.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        std::vector<Rational> rem(c_);
        std::vector<Rational> quo;
        const int dd = d.degree();
        if (static_cast<int>(rem.size()) - 1 >= dd)
            quo.assign(rem.size() - dd, Rational(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
            if (rem[i] == 0) continue;
            Rational f = rem[i] / d.c_.back();
            quo[i - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
        }
        return {QPoly(std::move(quo)), QPoly(std::move(rem))};
    }

    template <typename Real>
    Real eval(const Real& x) const {
        Real acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + Real(numerator(c_[i]).str()) / Real(denominator(c_[i]).str());
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            if (!out.empty()) {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                out += "-";
                a = -a;
            }
            const bool unit = (a == 1) && i > 0;
            if (!unit) out += rational_str(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

namespace detail {

/// Cyclotomic polynomial by repeated exact division of x^n - 1.
inline const QPoly& cyclotomic(int n) {
    static std::map<int, QPoly> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // compute recursively without re-locking
    auto compute = [](auto&& self, int m) -> QPoly {
        if (auto it = cache.find(m); it != cache.end()) return it->second;
        std::vector<Rational> xn(m + 1, Rational(0));
        xn[0] = -1;
        xn[m] = 1;
        QPoly p(std::move(xn));
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = p.divmod(self(self, d));
            if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
            p = std::move(q);
        }
        cache.emplace(m, p);
        return p;
    };
    compute(compute, n);
    return cache.at(n);
}

} // namespace detail

/// Minimal polynomial of 2cos(pi/q), q >= 3: fold the palindromic cyclotomic
/// polynomial of order 2q through z^k + z^-k = V_k(z + 1/z), where
/// V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}.
inline QPoly cos_minimal_poly(int q) {
    if (q < 3) throw std::domain_error("cos_minimal_poly: q must be >= 3");
    const QPoly& phi = detail::cyclotomic(2 * q);
    const int d = phi.degree() / 2;
    QPoly vkm1 = QPoly::constant(Rational(2));
    QPoly vk = QPoly::x();
    QPoly out = QPoly::constant(phi.coeff(d));
    for (int k = 1; k <= d; ++k) {
        out = out + vk * phi.coeff(d + k);
        QPoly next = QPoly::x() * vk - vkm1;
        vkm1 = std::move(vk);
        vk = std::move(next);
    }
    return out;
}

} // namespace heckeforge
