#pragma once

#include <heckeforge/qpoly.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <memory>
#include <mutex>

namespace heckeforge {

using HighPrecReal = boost::multiprecision::cpp_bin_float_100;

/// The real cyclotomic field Q(lambda_q), lambda_q = 2cos(pi/q), as
/// Q[x]/(minpoly). One shared instance per q; see number_field(q).
class NumberField {
public:
    explicit NumberField(int q) : q_(q), minpoly_(cos_minimal_poly(q)) {
        using boost::math::constants::pi;
        lambda_hp_ = 2 * cos(pi<HighPrecReal>() / q);
        lambda_ = lambda_hp_.convert_to<double>();
        // sanity: the claimed root really is one
        if (std::fabs(minpoly_.eval(HighPrecReal(lambda_hp_)).convert_to<double>()) > 1e-12)
            throw std::logic_error("minimal polynomial does not vanish at 2cos(pi/q)");
    }

    int q() const { return q_; }
    int degree() const { return minpoly_.degree(); }
    const QPoly& minpoly() const { return minpoly_; }
    double lambda() const { return lambda_; }
    const HighPrecReal& lambda_hp() const { return lambda_hp_; }

private:
    int q_;
    QPoly minpoly_;
    HighPrecReal lambda_hp_;
    double lambda_ = 0;
};

/// Shared, cached field instance for a given q (q >= 3).
inline std::shared_ptr<const NumberField> number_field(int q) {
    if (q < 3) throw std::domain_error("number_field: q must be >= 3");
    static std::map<int, std::shared_ptr<const NumberField>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_shared<NumberField>(q)).first;
    return it->second;
}

/// Element of Q(lambda_q), stored as the reduced representative polynomial
/// in lambda_q (degree < deg minpoly). Immutable value type.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default; // unusable until given a field; zero of no field

    AlgebraicNumber(std::shared_ptr<const NumberField> field, QPoly rep)
        : field_(std::move(field)), rep_(reduce(*field_, std::move(rep))) {}

    static AlgebraicNumber from_rational(std::shared_ptr<const NumberField> field, Rational v) {
        return AlgebraicNumber(std::move(field), QPoly::constant(std::move(v)));
    }
    static AlgebraicNumber zero(std::shared_ptr<const NumberField> field) {
        return from_rational(std::move(field), Rational(0));
    }
    static AlgebraicNumber one(std::shared_ptr<const NumberField> field) {
        return from_rational(std::move(field), Rational(1));
    }
    /// The generator lambda_q itself.
    static AlgebraicNumber lambda(std::shared_ptr<const NumberField> field) {
        return AlgebraicNumber(std::move(field), QPoly::x());
    }

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    int q() const { return field_->q(); }
    const QPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }

    bool operator==(const AlgebraicNumber& o) const {
        return field_->q() == o.field_->q() && rep_ == o.rep_;
    }

    AlgebraicNumber operator+(const AlgebraicNumber& o) const {
        check_field(o);
        return AlgebraicNumber(field_, rep_ + o.rep_);
    }
    AlgebraicNumber operator-(const AlgebraicNumber& o) const {
        check_field(o);
        return AlgebraicNumber(field_, rep_ - o.rep_);
    }
    AlgebraicNumber operator-() const { return AlgebraicNumber(field_, -rep_); }
    AlgebraicNumber operator*(const AlgebraicNumber& o) const {
        check_field(o);
        return AlgebraicNumber(field_, rep_ * o.rep_);
    }
    AlgebraicNumber operator*(const Rational& k) const {
        return AlgebraicNumber(field_, rep_ * k);
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// gcd(rep, minpoly) = 1 since minpoly is irreducible and rep != 0.
    AlgebraicNumber inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        QPoly r0 = field_->minpoly(), r1 = rep_;
        QPoly s0 = QPoly::constant(Rational(0)), s1 = QPoly::constant(Rational(1));
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            QPoly s2 = s0 - q * s1;
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        // r0 = gcd (a nonzero constant), s0 * rep = r0 (mod minpoly)
        if (r0.degree() != 0) throw std::logic_error("minpoly not coprime with representative");
        return AlgebraicNumber(field_, s0 * (Rational(1) / r0.coeff(0)));
    }

    AlgebraicNumber operator/(const AlgebraicNumber& o) const { return *this * o.inverse(); }

    double to_double() const { return rep_.eval(field_->lambda()); }

    /// Embedding at >= `precision` correct decimal digits (1 <= precision <= 90),
    /// evaluated at 100-digit working precision. Increasing `precision` never
    /// changes the value, so refinement is trivially monotone.
    HighPrecReal embed(int precision) const {
        if (precision < 1 || precision > 90)
            throw std::domain_error("real_embed: precision must be in [1, 90]");
        return rep_.eval(HighPrecReal(field_->lambda_hp()));
    }

    /// Sign of the leading (highest-degree) nonzero rational coefficient;
    /// 0 for the zero element.
    int leading_sign() const {
        if (rep_.is_zero()) return 0;
        return rep_.leading() < 0 ? -1 : 1;
    }

    std::string str() const { return rep_.str("l"); }

private:
    static QPoly reduce(const NumberField& f, QPoly p) {
        if (p.degree() >= f.minpoly().degree()) p = p.divmod(f.minpoly()).second;
        return p;
    }
    void check_field(const AlgebraicNumber& o) const {
        if (field_->q() != o.field_->q())
            throw std::domain_error("mixed number fields (q mismatch)");
    }

    std::shared_ptr<const NumberField> field_;
    QPoly rep_;
};

/// lambda_q = 2cos(pi/q) together with its minimal polynomial, q >= 3.
inline std::pair<AlgebraicNumber, QPoly> lambda_q(int q) {
    auto field = number_field(q);
    return {AlgebraicNumber::lambda(field), field->minpoly()};
}

/// Embedding with the stated decimal precision; see AlgebraicNumber::embed.
inline HighPrecReal real_embed(const AlgebraicNumber& a, int precision) {
    return a.embed(precision);
}

} // namespace heckeforge
