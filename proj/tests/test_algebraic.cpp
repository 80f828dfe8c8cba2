#include <catch2/catch_amalgamated.hpp>

#include <heckeforge/algebraic.hpp>

#include <cmath>

using namespace heckeforge;
using Catch::Approx;

TEST_CASE("minimal polynomial of 2cos(pi/q) for small q") {
    // Frozen expansions, checked against folding the cyclotomic polynomial
    // Phi_{2q} by hand: q=3 -> x-1, q=4 -> x^2-2, q=5 -> x^2-x-1, q=6 -> x^2-3.
    CHECK(cos_minimal_poly(3).str("x") == "x - 1");
    CHECK(cos_minimal_poly(4).str("x") == "x^2 - 2");
    CHECK(cos_minimal_poly(5).str("x") == "x^2 - x - 1");
    CHECK(cos_minimal_poly(6).str("x") == "x^2 - 3");
    CHECK(cos_minimal_poly(7).degree() == 3);  // phi(14)/2 = 3
    CHECK(cos_minimal_poly(12).degree() == 4); // phi(24)/2 = 4
}

TEST_CASE("minimal polynomial degree is phi(2q)/2") {
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                while (n % p == 0) n /= p;
                r -= r / p;
            }
        if (n > 1) r -= r / n;
        return r;
    };
    for (int q = 3; q <= 20; ++q) {
        INFO("q = " << q);
        CHECK(static_cast<int>(cos_minimal_poly(q).degree()) == phi(2 * q) / 2);
    }
}

TEST_CASE("minimal polynomial annihilates 2cos(pi/q) numerically") {
    for (int q = 3; q <= 24; ++q) {
        double lam = 2.0 * std::cos(std::acos(-1.0) / q);
        INFO("q = " << q);
        CHECK(std::fabs(cos_minimal_poly(q).eval(lam)) < 1e-9);
    }
}

TEST_CASE("field element arithmetic reduces modulo the minimal polynomial") {
    auto [lam4, p4] = lambda_q(4);
    CHECK(p4.str("x") == "x^2 - 2");
    // lambda_4^2 = 2 exactly
    CHECK((lam4 * lam4) == AlgebraicNumber::from_rational(lam4.field(), 2));

    auto [lam5, p5] = lambda_q(5);
    // lambda_5^2 = lambda_5 + 1 exactly (golden ratio relation)
    CHECK((lam5 * lam5) == (lam5 + AlgebraicNumber::one(lam5.field())));
    // 1/lambda_5 = lambda_5 - 1 exactly
    CHECK(lam5.inverse() == (lam5 - AlgebraicNumber::one(lam5.field())));
    CHECK((lam5 * lam5.inverse()) == AlgebraicNumber::one(lam5.field()));
}

TEST_CASE("embedding matches double cosine and respects precision switch") {
    for (int q : {3, 4, 5, 6, 7, 11}) {
        auto [lam, mp] = lambda_q(q);
        double expect = 2.0 * std::cos(std::acos(-1.0) / q);
        CHECK(lam.to_double() == Approx(expect).epsilon(1e-12));
        CHECK(lam.embed(50).convert_to<double>() == Approx(expect).epsilon(1e-12));
    }
    auto [lam3, mp3] = lambda_q(3);
    CHECK_THROWS_AS(lam3.embed(0), std::domain_error);
    CHECK_THROWS_AS(lam3.embed(99), std::domain_error);
    // 50-digit check: lambda_3 = 1 exactly, so the embedding is exact
    CHECK(lam3.embed(50) == 1);
}

TEST_CASE("field operations guard q consistency and invertibility") {
    auto [lam4, p4] = lambda_q(4);
    auto [lam5, p5] = lambda_q(5);
    CHECK_THROWS_AS(lam4 + lam5, std::domain_error);
    CHECK_THROWS_AS(lam4 * lam5, std::domain_error);
    CHECK_THROWS_AS(AlgebraicNumber::zero(lam4.field()).inverse(), std::domain_error);
    CHECK_THROWS_AS(lambda_q(2), std::domain_error);
    CHECK_THROWS_AS(lambda_q(-1), std::domain_error);
}

TEST_CASE("rational constants behave as scalars") {
    auto [lam5, p5] = lambda_q(5);
    auto half = AlgebraicNumber::from_rational(lam5.field(), Rational(1, 2));
    CHECK((half + half) == AlgebraicNumber::one(lam5.field()));
    CHECK((lam5 * half).to_double() == Approx(lam5.to_double() / 2));
    CHECK((lam5 / lam5) == AlgebraicNumber::one(lam5.field()));
    CHECK(half.inverse() == AlgebraicNumber::from_rational(lam5.field(), 2));
}

TEST_CASE("sign of the real embedding") {
    auto [lam5, p5] = lambda_q(5);
    CHECK(lam5.leading_sign() > 0);
    CHECK((AlgebraicNumber::zero(lam5.field()) - lam5).leading_sign() < 0);
    CHECK(AlgebraicNumber::zero(lam5.field()).leading_sign() == 0);
    // leading_sign is the sign of the top coefficient of the representative
    // polynomial (the canonicalization convention), not the numeric sign:
    // lambda_5 - 2 < 0 numerically, but its representative x - 2 leads with +1.
    auto diff = lam5 - AlgebraicNumber::from_rational(lam5.field(), 2);
    CHECK(diff.leading_sign() > 0);
    CHECK(diff.to_double() < 0);
}
