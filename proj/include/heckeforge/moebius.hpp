#pragma once

#include <heckeforge/algebraic.hpp>
#include <heckeforge/halfplane.hpp>

#include <array>

namespace heckeforge {

/// Unit-determinant Moebius transformation with entries in Q(lambda_q).
/// Entries are kept exactly as constructed; the projective identification
/// lives in equality, which normalizes the sign by making the first nonzero
/// entry's (a, b, c, d order) leading rational coefficient positive.
class MoebiusMap {
public:
    MoebiusMap(AlgebraicNumber a, AlgebraicNumber b, AlgebraicNumber c, AlgebraicNumber d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        AlgebraicNumber det = a_ * d_ - b_ * c_;
        if (!(det == AlgebraicNumber::one(a_.field())))
            throw std::domain_error("MoebiusMap determinant must be exactly 1");
    }

    static MoebiusMap identity(std::shared_ptr<const NumberField> f) {
        auto one = AlgebraicNumber::one(f), zero = AlgebraicNumber::zero(f);
        return MoebiusMap(one, zero, zero, one);
    }
    /// T: z -> -1/z.
    static MoebiusMap T(std::shared_ptr<const NumberField> f) {
        auto one = AlgebraicNumber::one(f), zero = AlgebraicNumber::zero(f);
        return MoebiusMap(zero, -one, one, zero);
    }
    /// U: z -> z + lambda_q.
    static MoebiusMap U(std::shared_ptr<const NumberField> f) {
        auto one = AlgebraicNumber::one(f), zero = AlgebraicNumber::zero(f);
        return MoebiusMap(one, AlgebraicNumber::lambda(f), zero, one);
    }
    /// S = TU: z -> -1/(z + lambda_q), elliptic of order q.
    static MoebiusMap S(std::shared_ptr<const NumberField> f) { return compose(T(f), U(f)); }

    const AlgebraicNumber& a() const { return a_; }
    const AlgebraicNumber& b() const { return b_; }
    const AlgebraicNumber& c() const { return c_; }
    const AlgebraicNumber& d() const { return d_; }
    const std::shared_ptr<const NumberField>& field() const { return a_.field(); }

    /// Canonical projective representative: first nonzero entry has positive
    /// leading rational coefficient.
    MoebiusMap canonical() const {
        MoebiusMap m = *this;
        int s = m.a_.leading_sign();
        if (s == 0) s = m.b_.leading_sign();
        if (s == 0) s = m.c_.leading_sign();
        if (s == 0) s = m.d_.leading_sign();
        if (s < 0) {
            m.a_ = -m.a_; m.b_ = -m.b_; m.c_ = -m.c_; m.d_ = -m.d_;
        }
        return m;
    }

    /// Projective equality (canonical forms agree).
    bool operator==(const MoebiusMap& o) const {
        return (a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_) ||
               (a_ == -o.a_ && b_ == -o.b_ && c_ == -o.c_ && d_ == -o.d_);
    }

    bool is_identity() const {
        return *this == identity(field());
    }

    static MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
        if (m1.field()->q() != m2.field()->q())
            throw std::domain_error("mixed number fields (q mismatch)");
        return MoebiusMap(m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
                          m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_);
    }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    /// Hyperbolic isometry action; im(mz) = im(z)/|cz+d|^2 > 0.
    HalfPlanePoint apply(const HalfPlanePoint& z) const {
        z.require_interior();
        std::complex<double> w = z.z();
        std::complex<double> num = a_.to_double() * w + std::complex<double>(b_.to_double());
        std::complex<double> den = c_.to_double() * w + std::complex<double>(d_.to_double());
        std::complex<double> r = num / den;
        return {r.real(), r.imag()};
    }

    std::array<double, 4> to_doubles() const {
        return {a_.to_double(), b_.to_double(), c_.to_double(), d_.to_double()};
    }

private:
    AlgebraicNumber a_, b_, c_, d_;
};

inline HalfPlanePoint moebius_apply(const MoebiusMap& m, const HalfPlanePoint& z) {
    return m.apply(z);
}
inline MoebiusMap moebius_compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return MoebiusMap::compose(m1, m2);
}

} // namespace heckeforge
