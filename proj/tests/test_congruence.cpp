#include <heckeforge/congruence.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>
#include <vector>

using namespace heckeforge;

namespace {

// Independent oracle: enumerate SL(2, Z/N) outright and count the right
// cosets of the lower-triangular-mod-N subgroup by orbit counting. Only the
// group axioms and the definition of Gamma_0(N) go into this.
struct Sl2Oracle {
    long N;
    std::vector<std::array<long, 4>> elements; // all of SL(2, Z/N)
    explicit Sl2Oracle(long n) : N(n) {
        for (long a = 0; a < N; ++a)
            for (long b = 0; b < N; ++b)
                for (long c = 0; c < N; ++c)
                    for (long d = 0; d < N; ++d)
                        if (((a * d - b * c) % N + N) % N == 1 % N)
                            elements.push_back({a, b, c, d});
    }
    static std::array<long, 4> mul(const std::array<long, 4>& x,
                                   const std::array<long, 4>& y, long N) {
        auto r = [N](long v) { return ((v % N) + N) % N; };
        return {r(x[0] * y[0] + x[1] * y[2]), r(x[0] * y[1] + x[1] * y[3]),
                r(x[2] * y[0] + x[3] * y[2]), r(x[2] * y[1] + x[3] * y[3])};
    }
    static std::array<long, 4> inv(const std::array<long, 4>& x, long N) {
        auto r = [N](long v) { return ((v % N) + N) % N; };
        return {r(x[3]), r(-x[1]), r(-x[2]), r(x[0])}; // adjugate, det = 1
    }
    // same right coset of Gamma_0(N) iff x * y^-1 has lower-left entry 0
    bool same_coset(const std::array<long, 4>& x, const std::array<long, 4>& y) const {
        return mul(x, inv(y, N), N)[2] == 0;
    }
    long coset_count() const {
        std::vector<std::array<long, 4>> found;
        for (const auto& e : elements) {
            bool known = false;
            for (const auto& f : found)
                if (same_coset(e, f)) {
                    known = true;
                    break;
                }
            if (!known) found.push_back(e);
        }
        return static_cast<long>(found.size());
    }
};

} // namespace

TEST_CASE("pinned invariant tables", "[congruence]") {
    SECTION("level 1, 2 and 11") {
        CHECK(gamma0_invariants(1) == Gamma0Data{1, 1, 1, 1, 1, 0});
        CHECK(gamma0_invariants(2) == Gamma0Data{2, 3, 1, 0, 2, 0});
        CHECK(gamma0_invariants(11) == Gamma0Data{11, 12, 0, 0, 2, 1});
    }
    SECTION("elliptic point counts for small N") {
        const long nu2[] = {1, 1, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 2};
        const long nu3[] = {1, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2};
        for (long n = 1; n <= 13; ++n) {
            INFO("N = " << n);
            auto d = gamma0_invariants(n);
            CHECK(d.nu2 == nu2[n - 1]);
            CHECK(d.nu3 == nu3[n - 1]);
        }
    }
    SECTION("cusp counts for small N") {
        const long nuinf[] = {1, 2, 2, 3, 2, 4, 2, 4, 4, 4, 2, 6};
        for (long n = 1; n <= 12; ++n) {
            INFO("N = " << n);
            CHECK(gamma0_invariants(n).cusps == nuinf[n - 1]);
        }
    }
    SECTION("validation") {
        CHECK_THROWS_AS(gamma0_invariants(0), std::domain_error);
        CHECK_THROWS_AS(gamma0_invariants(-5), std::domain_error);
        CHECK_THROWS_AS(coset_reps(0), std::domain_error);
    }
}

TEST_CASE("index matches the brute-force coset count", "[congruence]") {
    for (long n = 1; n <= 12; ++n) {
        INFO("N = " << n);
        CHECK(gamma0_invariants(n).index == Sl2Oracle(n).coset_count());
    }
}

TEST_CASE("index is multiplicative over coprime levels", "[congruence]") {
    for (long n = 1; n <= 30; ++n)
        for (long m = n + 1; m <= 30; ++m) {
            if (std::gcd(n, m) != 1) continue;
            INFO("N = " << n << ", M = " << m);
            REQUIRE(gamma0_invariants(n * m).index ==
                    gamma0_invariants(n).index * gamma0_invariants(m).index);
        }
}

TEST_CASE("genus is a nonnegative integer up to 500", "[congruence]") {
    // the formula itself throws if 12 ever fails to divide, so evaluating
    // is the check; also pin the vanishing of elliptic counts at 4|N, 9|N
    for (long n = 1; n <= 500; ++n) {
        INFO("N = " << n);
        Gamma0Data d;
        REQUIRE_NOTHROW(d = gamma0_invariants(n));
        REQUIRE(d.genus >= 0);
        if (n % 4 == 0) REQUIRE(d.nu2 == 0);
        if (n % 9 == 0) REQUIRE(d.nu3 == 0);
    }
}

TEST_CASE("coset representatives", "[congruence]") {
    SECTION("count equals the index for N <= 60") {
        for (long n = 1; n <= 60; ++n) {
            INFO("N = " << n);
            REQUIRE(static_cast<long>(coset_reps(n).size()) ==
                    gamma0_invariants(n).index);
        }
    }
    SECTION("pinned small counts") {
        CHECK(coset_reps(1).size() == 1);
        CHECK(coset_reps(1)[0] == std::array<long, 4>{1, 0, 0, 1});
        CHECK(coset_reps(2).size() == 3);
        CHECK(coset_reps(6).size() == 12);
    }
    SECTION("each representative has determinant 1 and reduced entries") {
        for (long n : {2L, 3L, 7L, 12L, 30L, 60L}) {
            INFO("N = " << n);
            for (const auto& r : coset_reps(n)) {
                for (long e : r) {
                    REQUIRE(e >= 0);
                    REQUIRE(e < n);
                }
                REQUIRE(((r[0] * r[3] - r[1] * r[2]) % n + n) % n == 1);
            }
        }
    }
    SECTION("bottom rows are the lexicographic minimum of their unit class") {
        for (long n : {2L, 6L, 15L, 20L}) {
            INFO("N = " << n);
            for (const auto& r : coset_reps(n)) {
                for (long u = 1; u < n; ++u) {
                    if (std::gcd(u, n) != 1) continue;
                    std::array<long, 2> scaled{u * r[2] % n, u * r[3] % n};
                    REQUIRE(std::array<long, 2>{r[2], r[3]} <= scaled);
                }
            }
        }
    }
    SECTION("representatives are pairwise inequivalent and cover the group") {
        for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L}) {
            INFO("N = " << n);
            Sl2Oracle oracle(n);
            auto reps = coset_reps(n);
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j)
                    REQUIRE_FALSE(oracle.same_coset(reps[i], reps[j]));
            for (const auto& e : oracle.elements) {
                long hits = 0;
                for (const auto& r : reps)
                    if (oracle.same_coset(e, r)) ++hits;
                REQUIRE(hits == 1);
            }
        }
    }
}

TEST_CASE("genus classification sweeps", "[congruence]") {
    SECTION("genus zero up to 25") {
        CHECK(classify_genus(25, 0) ==
              std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25});
    }
    SECTION("genus one up to 25") {
        CHECK(classify_genus(25, 1) == std::vector<long>{11, 14, 15, 17, 19, 20, 21, 24});
    }
    SECTION("genus two up to 50") {
        CHECK(classify_genus(50, 2) == std::vector<long>{22, 23, 26, 28, 29, 31, 37, 50});
    }
    SECTION("edges") {
        CHECK(classify_genus(1, 0) == std::vector<long>{1});
        CHECK(classify_genus(0, 0).empty());
        CHECK(classify_genus(25, -1).empty());
    }
}
