#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qqg/algebra.hpp"
#include "qqg/matrix.hpp"
#include "qqg/prng.hpp"

using namespace qqg;

namespace {

AlgebraElem random_elem(const Algebra& alg, Prng& rng, int terms = 4) {
    AlgebraElem x(&alg);
    for (int i = 0; i < terms; ++i)
        x = x + alg.monomial((int)(rng.next() % alg.n()), (int)(rng.next() % alg.n()),
                             (int)(rng.next() % alg.m()),
                             alg.cy().from_int(rng.range(-4, 4)));
    return x;
}

}  // namespace

TEST_CASE("straightening against the defining relations") {
    auto cy = make_context(3);
    Algebra alg(cy);
    AlgebraElem E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(1);
    AlgebraElem Kinv = alg.gen_K(alg.m() - 1);

    // K E = q^2 E K
    CHECK(K * E == (E * K).scaled(cy->q_power(2)));
    // K F = q^-2 F K
    CHECK(K * F == (F * K).scaled(cy->q_power(-2)));
    // F E = E F + (K^-1 - K)/(q - q^-1)
    CycloNum lam = (cy->q_power(1) - cy->q_power(-1)).inverse();
    CHECK(F * E == E * F + (Kinv - K).scaled(lam));
    // E^{n-1} E = 0, F^n = 0, K^{n^2} = 1
    AlgebraElem En1 = alg.monomial(alg.n() - 1, 0, 0, cy->one());
    CHECK((En1 * E).is_zero());
    CHECK(alg.gen_K(alg.m()) == alg.one());
}

TEST_CASE("commutation identity for every power 1 <= r <= n-1") {
    for (int n : {3, 5}) {
        auto cy = make_context(n);
        Algebra alg(cy);
        AlgebraElem E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(1);
        AlgebraElem Kinv = alg.gen_K(alg.m() - 1);
        for (int r = 1; r <= n - 1; ++r) {
            AlgebraElem Er = alg.monomial(r, 0, 0, cy->one());
            AlgebraElem Er1 = alg.monomial(r - 1, 0, 0, cy->one());
            CycloNum A = (cy->one() - cy->q_power(-2L * r)) *
                         ((cy->one() - cy->q_power(-2)) * (cy->q_power(1) - cy->q_power(-1)))
                             .inverse();
            CycloNum B = (cy->one() - cy->q_power(2L * r)) *
                         ((cy->one() - cy->q_power(2)) * (cy->q_power(1) - cy->q_power(-1)))
                             .inverse();
            AlgebraElem rhs = Er * F + Er1 * (Kinv.scaled(A) - K.scaled(B));
            CHECK(F * Er == rhs);
        }
    }
}

TEST_CASE("multiplication is associative on seeded PBW triples") {
    auto cy = make_context(3);
    Algebra alg(cy);
    Prng rng(0xC0FFEE);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElem a = random_elem(alg, rng);
        AlgebraElem b = random_elem(alg, rng);
        AlgebraElem c = random_elem(alg, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("block idempotents: orthogonal, central, resolution of identity") {
    for (int n : {3, 5}) {
        auto cy = make_context(n);
        Algebra alg(cy);
        AlgebraElem sum(&alg);
        for (int i = 0; i < n; ++i) sum = sum + alg.block_idempotent(i);
        CHECK(sum == alg.one());

        AlgebraElem e0 = alg.block_idempotent(0), e1 = alg.block_idempotent(1);
        CHECK((e0 * e1).is_zero());
        for (int i = 0; i < n; ++i) {
            AlgebraElem ei = alg.block_idempotent(i);
            CHECK(ei * ei == ei);
            for (const auto& g : {alg.gen_E(), alg.gen_F(), alg.gen_K(1)})
                CHECK(ei * g == g * ei);
        }
    }
}

TEST_CASE("weight idempotents resolve the identity orthogonally") {
    auto cy = make_context(3);
    Algebra alg(cy);
    AlgebraElem sum(&alg);
    for (int s = 0; s < alg.m(); ++s) sum = sum + alg.weight_idempotent(s);
    CHECK(sum == alg.one());
    CHECK((alg.weight_idempotent(0) * alg.weight_idempotent(1)).is_zero());
    CHECK(alg.weight_idempotent(2) * alg.weight_idempotent(2) == alg.weight_idempotent(2));
}

TEST_CASE("block relations: K_i^n = q^{n-i} e_i and conjugation") {
    for (int n : {3, 5}) {
        auto cy = make_context(n);
        Algebra alg(cy);
        for (int i = 0; i < n; ++i) {
            AlgebraElem ei = alg.block_idempotent(i);
            AlgebraElem Ki = alg.gen_K(1) * ei;
            AlgebraElem Ei = alg.gen_E() * ei;
            AlgebraElem Kiinv = alg.gen_K(alg.m() - 1) * ei;
            AlgebraElem Kn = ei;
            for (int p = 0; p < n; ++p) Kn = Kn * Ki;
            CHECK(Kn == ei.scaled(cy->q_power(n - i)));
            CHECK(Ki * Ei * Kiinv == Ei.scaled(cy->q_power(2)));
            CHECK(Ki * Kiinv == ei);
        }
    }
}

TEST_CASE("sub-idempotents T^i_j") {
    auto cy = make_context(3);
    Algebra alg(cy);
    const int n = 3;
    for (int i = 1; i <= n - 1; ++i) {
        AlgebraElem sum(&alg);
        for (int j = 1; j <= n; ++j) sum = sum + alg.sub_idempotent(i, j);
        CHECK(sum == alg.block_idempotent(i));
        CHECK((alg.sub_idempotent(i, 1) * alg.sub_idempotent(i, 2)).is_zero());
        for (int j = 1; j <= n; ++j) {
            AlgebraElem T = alg.sub_idempotent(i, j);
            CHECK(T * T == T);
            // K_i T^i_j = zeta^{(1-j)n - i} T^i_j
            AlgebraElem KT = alg.gen_K(1) * T;
            CHECK(KT == T.scaled(cy->root_power((long)(1 - j) * n - i)));
        }
    }
}

TEST_CASE("A-elements annihilate under F and shift K by q^{2k}") {
    auto cy = make_context(3);
    Algebra alg(cy);
    const int n = 3;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                AlgebraElem A = alg.a_element(i, j, k);
                AlgebraElem T = alg.sub_idempotent(i, j);
                CHECK((alg.gen_F() * A * T).is_zero());
                CHECK(alg.gen_K(1) * A == (A * alg.gen_K(1)).scaled(cy->q_power(2L * k)));
            }
}

TEST_CASE("A-element coefficients match the telescoping recurrence") {
    auto cy = make_context(3);
    Algebra alg(cy);
    const int n = 3;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            // a_{kk} = 1, a_{ks} = a_{k1} + a_{k-1,s-1}; compare against the
            // closed-form route used by the implementation.
            std::vector<std::vector<CycloNum>> a(n + 1, std::vector<CycloNum>(n + 1, cy->zero()));
            for (int k = 1; k <= n; ++k) a[k][k] = cy->one();
            for (int k = 2; k <= n; ++k) a[k][1] = alg.a_coeff(i, j, k, 1);
            for (int k = 3; k <= n; ++k)
                for (int s = 2; s < k; ++s) a[k][s] = a[k][1] + a[k - 1][s - 1];
            for (int k = 1; k <= n; ++k)
                for (int s = 1; s <= k; ++s) {
                    CHECK(alg.a_coeff(i, j, k, s) == a[k][s]);
                    CHECK(!alg.a_coeff(i, j, k, s).is_zero());
                }
        }
}

TEST_CASE("associator scalars: normalization and cocycle identity") {
    auto cy = make_context(3);
    Algebra alg(cy);
    const int m = alg.m();
    for (int t = 0; t < m; ++t)
        for (int r = 0; r < m; ++r) {
            CHECK(alg.associator_scalar(0, t, r) == cy->one());
            CHECK(alg.associator_scalar(t, 0, r) == cy->one());
            CHECK(alg.associator_scalar(t, r, 0) == cy->one());
        }
    // Every scalar is a root of unity.
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int r = 0; r < m; ++r)
                CHECK(cy->root_power_index(alg.associator_scalar(s, t, r)) >= 0);
    // Exhaustive normalized 3-cocycle identity on Z_m at n = 3.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    if (!alg.cocycle_holds(a, b, c, d)) {
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(c);
                        CAPTURE(d);
                        REQUIRE(false);
                    }
                }
    CHECK(true);
}

TEST_CASE("He_i has dimension n^3 at n = 3 (rank over the PBW basis)") {
    auto cy = make_context(3);
    Algebra alg(cy);
    const int n = 3, m = 9, dim = n * n * n * n;
    for (int i = 0; i < n; ++i) {
        AlgebraElem ei = alg.block_idempotent(i);
        Mat span(cy.get(), dim, dim);
        int col = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < m; ++c) {
                    AlgebraElem x = alg.monomial(a, b, c, cy->one()) * ei;
                    for (const auto& [mono, coef] : x.terms())
                        span.at((mono.a * n + mono.b) * m + mono.c, col) = coef;
                    ++col;
                }
        CHECK(rank(span) == n * n * n);
    }
}
