#include <heckeforge/jack.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace heckeforge;

namespace {

Partition P(std::initializer_list<long> parts) { return Partition(std::vector<long>(parts)); }

/// Complete homogeneous symmetric polynomial h_k: sum of all degree-k monomials.
MultiPoly h_complete(long k, int N) {
    MultiPoly out(N);
    if (k < 0) return out;
    MultiPoly::Exponents e(N, 0);
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == N - 1) {
            e[pos] = static_cast<int>(remaining);
            out.add_term(e, 1);
            e[pos] = 0;
            return;
        }
        for (long take = 0; take <= remaining; ++take) {
            e[pos] = static_cast<int>(take);
            self(self, pos + 1, remaining - take);
        }
        e[pos] = 0;
    };
    rec(rec, 0, k);
    return out;
}

/// Independent Schur-polynomial oracle: the Jacobi-Trudi determinant
/// s_lambda = det( h_{lambda_i - i + j} ), expanded over permutations.
MultiPoly jt_schur(const Partition& la, int N) {
    const int l = static_cast<int>(la.length());
    if (l == 0) return MultiPoly::constant(N, 1);
    std::vector<std::vector<MultiPoly>> H(l, std::vector<MultiPoly>(l, MultiPoly(N)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            H[i][j] = h_complete(la.parts()[i] - i + j, N);
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    MultiPoly det(N);
    do {
        int inv = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inv;
        MultiPoly prod = MultiPoly::constant(N, (inv % 2 == 0) ? 1 : -1);
        for (int i = 0; i < l; ++i) prod *= H[i][perm[i]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<Rational> coeff_vector(const SymBasisTables& tables,
                                   const std::map<Partition, Rational>& coeffs) {
    std::vector<Rational> v(tables.parts.size(), 0);
    for (const auto& [mu, c] : coeffs) v[tables.index_of(mu)] = c;
    return v;
}

} // namespace

TEST_CASE("partition basics", "[jack]") {
    SECTION("validation and normalization") {
        CHECK(P({3, 1, 1}).length() == 3);
        CHECK(P({3, 1, 1}).size() == 5);
        CHECK(Partition().size() == 0);
        CHECK(Partition(std::vector<long>{2, 1, 0, 0}) == P({2, 1}));
        CHECK_THROWS_AS(Partition(std::vector<long>{1, 2}), std::domain_error);
        CHECK_THROWS_AS(Partition(std::vector<long>{2, -1}), std::domain_error);
    }
    SECTION("z factors") {
        CHECK(P({1}).z() == 1);
        CHECK(P({1, 1}).z() == 2);
        CHECK(P({2}).z() == 2);
        CHECK(P({2, 1}).z() == 2);
        CHECK(P({3, 1, 1}).z() == 6);       // 3 * (1^2 * 2!)
        CHECK(P({2, 2, 2}).z() == 48);      // 2^3 * 3!
        CHECK(Partition().z() == 1);
    }
    SECTION("string round trip") {
        CHECK(P({3, 1, 1}).str() == "3,1,1");
        CHECK(Partition().str() == "0");
        CHECK(Partition::parse("3,1,1") == P({3, 1, 1}));
        CHECK(Partition::parse("") == Partition());
        CHECK(Partition::parse("0") == Partition());
        CHECK_THROWS(Partition::parse("3,,1"));
        CHECK_THROWS(Partition::parse("1,3"));
    }
    SECTION("dominance") {
        CHECK(dominates(P({4}), P({2, 2})));
        CHECK(dominates(P({2, 2}), P({2, 1, 1})));
        CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
        CHECK(dominates(P({3, 1}), P({3, 1})));
        CHECK_FALSE(dominates(P({3}), P({2, 1, 1}))); // sizes differ (3 vs 4)
        CHECK_FALSE(dominates(P({2, 2}), P({3})));    // sizes differ (4 vs 3)
        // incomparable pair
        CHECK_FALSE(dominates(P({3, 1, 1, 1}), P({2, 2, 2})));
        CHECK_FALSE(dominates(P({2, 2, 2}), P({3, 1, 1, 1})));
    }
    SECTION("partition counts") {
        CHECK(partitions_of(0).size() == 1);
        CHECK(partitions_of(4).size() == 5);
        CHECK(partitions_of(5).size() == 7);
        CHECK(partitions_of(6).size() == 11);
        CHECK(partitions_of(6, 2).size() == 4); // (6),(5,1),(4,2),(3,3)
        CHECK(partitions_of(4).front() == P({4}));
        CHECK(partitions_of(4).back() == P({1, 1, 1, 1}));
    }
}

TEST_CASE("power sum / monomial transition", "[jack]") {
    SECTION("degree-3 matrix matches the hand-expanded table") {
        const auto& t = sym_basis_tables(3);
        // ascending lex: (1,1,1) < (2,1) < (3)
        REQUIRE(t.parts ==
                std::vector<Partition>{P({1, 1, 1}), P({2, 1}), P({3})});
        auto row = [&](const Partition& la) { return t.p_in_m[t.index_of(la)]; };
        CHECK(row(P({3})) == std::vector<Rational>{0, 0, 1});       // p3 = m3
        CHECK(row(P({2, 1})) == std::vector<Rational>{0, 1, 1});    // p2 p1 = m21 + m3
        CHECK(row(P({1, 1, 1})) == std::vector<Rational>{6, 3, 1}); // p1^3
    }
    SECTION("inverse really inverts, degrees 1..6") {
        for (long d = 1; d <= 6; ++d) {
            const auto& t = sym_basis_tables(d);
            const std::size_t n = t.parts.size();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Rational dot = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        dot += t.m_in_p[i][k] * t.p_in_m[k][j];
                    REQUIRE(dot == (i == j ? 1 : 0));
                }
        }
    }
}

TEST_CASE("alpha inner product on power sums", "[jack]") {
    const Rational a(5, 3);
    SECTION("pinned values") {
        CHECK(inner_product_alpha(P({1}), P({1}), a) == a);
        CHECK(inner_product_alpha(P({2}), P({1, 1}), a) == 0);
        CHECK(inner_product_alpha(P({1, 1}), P({1, 1}), a) == 2 * a * a);
    }
    SECTION("alpha = 0 rejected") {
        CHECK_THROWS_AS(inner_product_alpha(P({1}), P({1}), 0), std::domain_error);
    }
}

TEST_CASE("jack polynomials", "[jack]") {
    SECTION("P_(1) is m_(1) for any alpha") {
        for (int N : {1, 2, 4})
            CHECK(jack_polynomial(P({1}), Rational(7, 2), N) ==
                  monomial_symmetric(P({1}), N));
    }
    SECTION("P_(2) coefficient on m_(1,1) is 2/(1+alpha)") {
        for (Rational a : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
            INFO("alpha = " << a);
            auto coeffs = jack_coefficients(P({2}), a);
            REQUIRE(coeffs.size() == 2);
            CHECK(coeffs.at(P({2})) == 1);
            CHECK(coeffs.at(P({1, 1})) == Rational(2) / (1 + a));
        }
    }
    SECTION("monic dominance triangularity up to degree 5") {
        for (long d = 1; d <= 5; ++d)
            for (const auto& la : partitions_of(d)) {
                auto coeffs = jack_coefficients(la, Rational(1, 2));
                REQUIRE(coeffs.at(la) == 1);
                for (const auto& [mu, c] : coeffs) {
                    INFO(la.str() << " includes " << mu.str());
                    REQUIRE(dominates(la, mu));
                }
            }
    }
    SECTION("orthogonality for |lambda| <= 5, alpha in {1/2, 1, 2}") {
        for (Rational a : {Rational(1, 2), Rational(1), Rational(2)})
            for (long d = 1; d <= 5; ++d) {
                const auto& t = sym_basis_tables(d);
                auto parts = partitions_of(d);
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    auto f = coeff_vector(t, jack_coefficients(parts[i], a));
                    REQUIRE(inner_product_m_vectors(t, f, f, a) > 0);
                    for (std::size_t j = i + 1; j < parts.size(); ++j) {
                        auto g = coeff_vector(t, jack_coefficients(parts[j], a));
                        INFO("alpha = " << a << ", " << parts[i].str() << " vs "
                                        << parts[j].str());
                        REQUIRE(inner_product_m_vectors(t, f, g, a) == 0);
                    }
                }
            }
    }
    SECTION("alpha = 1 equals the Jacobi-Trudi Schur oracle, |lambda| <= 4, N <= 4") {
        for (long d = 1; d <= 4; ++d)
            for (const auto& la : partitions_of(d))
                for (int N = static_cast<int>(la.length()); N <= 4; ++N) {
                    INFO("lambda = " << la.str() << ", N = " << N);
                    REQUIRE(jack_polynomial(la, 1, N) == jt_schur(la, N));
                }
    }
    SECTION("coefficients are stable in the variable count") {
        auto p2 = jack_polynomial(P({2}), Rational(3), 2);
        auto p5 = jack_polynomial(P({2}), Rational(3), 5);
        CHECK(p2.coefficient({2, 0}) == p5.coefficient({2, 0, 0, 0, 0}));
        CHECK(p2.coefficient({1, 1}) == p5.coefficient({1, 1, 0, 0, 0}));
    }
    SECTION("validation") {
        CHECK_THROWS_AS(jack_polynomial(P({1, 1, 1}), 1, 2), std::domain_error);
        CHECK_THROWS_AS(jack_polynomial(P({2}), 0, 2), std::domain_error);
        CHECK_THROWS_AS(jack_polynomial(P({2}), Rational(-1), 2), std::domain_error);
    }
}

TEST_CASE("jack expansion", "[jack]") {
    SECTION("a basis element expands to itself") {
        auto e = jack_expand(jack_polynomial(P({1}), Rational(5, 2), 3), Rational(5, 2));
        REQUIRE(e.size() == 1);
        CHECK(e.at(P({1})) == 1);
    }
    SECTION("(x1+x2)^2 over P_(2) and P_(1,1)") {
        MultiPoly e1 = MultiPoly::variable(2, 1) + MultiPoly::variable(2, 2);
        for (Rational a : {Rational(1, 2), Rational(1), Rational(3)}) {
            INFO("alpha = " << a);
            auto e = jack_expand(e1 * e1, a);
            REQUIRE(e.size() == 2);
            CHECK(e.at(P({2})) == 1);
            CHECK(e.at(P({1, 1})) == 2 * a / (1 + a));
        }
    }
    SECTION("zero expands to nothing") {
        CHECK(jack_expand(MultiPoly(3), 1).empty());
    }
    SECTION("round trip on random combinations") {
        std::mt19937 rng(7201);
        const Rational a(2, 3);
        const int N = 3;
        for (int trial = 0; trial < 20; ++trial) {
            std::map<Partition, Rational> want;
            MultiPoly p(N);
            for (long d = 0; d <= 4; ++d)
                for (const auto& la : partitions_of(d, N)) {
                    int num = std::uniform_int_distribution<int>(-3, 3)(rng);
                    if (num == 0) continue;
                    Rational c(num, std::uniform_int_distribution<int>(1, 3)(rng));
                    want[la] = c;
                    p += c * jack_polynomial(la, a, N);
                }
            REQUIRE(jack_expand(p, a) == want);
        }
    }
    SECTION("inhomogeneous input splits by degree") {
        MultiPoly p = jack_polynomial(P({2, 1}), 1, 3) + jack_polynomial(P({1}), 1, 3);
        auto e = jack_expand(p, 1);
        REQUIRE(e.size() == 2);
        CHECK(e.at(P({2, 1})) == 1);
        CHECK(e.at(P({1})) == 1);
    }
    SECTION("asymmetric input is rejected") {
        CHECK_THROWS_AS(jack_expand(MultiPoly::variable(2, 1), 1), std::domain_error);
    }
    SECTION("degree bound is enforced") {
        MultiPoly p = monomial_symmetric(P({3}), 2);
        CHECK_THROWS_AS(jack_expand(p, 1, 2), std::domain_error);
        CHECK_NOTHROW(jack_expand(p, 1, 3));
    }
}
