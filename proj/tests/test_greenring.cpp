#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qqg/greenexpr.hpp"
#include "qqg/greenring.hpp"
#include "qqg/prng.hpp"

using namespace qqg;

namespace {

Int lucas(long r, long i) {
    Int b = binomial((unsigned long)(r - i), (unsigned long)i) * Int(r);
    Int q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), Int(r - i).get_mpz_t());
    return q;
}

// sum_{i} (-1)^i (r/(r-i)) binom(r-i,i) y^{r-2i}, the two-orbit ladder.
YPoly ladder_poly(int r) {
    YPoly p(r + 1, Int(0));
    for (int i = 0; 2 * i <= r; ++i) p[r - 2 * i] = (i % 2 ? Int(-1) : Int(1)) * lucas(r, i);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

GreenElem random_elem(const GreenRing& R, Prng& rng) {
    GreenElem e;
    const int n = R.n();
    for (int i = 0; i < 3; ++i) {
        GreenElem m = R.one();
        for (int j = 0; j < 2; ++j) {
            switch (rng.next() % 6) {
                case 0: m = GreenElem::raw_mul(m, R.gen_y(1 + (int)(rng.next() % 3))); break;
                case 1: m = GreenElem::raw_mul(m, R.gen_x(1 + (int)(rng.next() % (n - 1)))); break;
                case 2: m = GreenElem::raw_mul(m, R.gen_eps(1 + (int)(rng.next() % (n - 1)))); break;
                case 3: m = GreenElem::raw_mul(m, R.gen_zp(1)); break;
                case 4: m = GreenElem::raw_mul(m, R.gen_zm(1)); break;
                case 5:
                    m = GreenElem::raw_mul(
                        m, R.gen_w(1 + (int)(rng.next() % 3),
                                   R.eta_labels()[rng.next() % R.eta_labels().size()]));
                    break;
            }
        }
        e = e + m.scaled(Int(rng.range(-3, 3)));
    }
    return e;
}

}  // namespace

TEST_CASE("polynomial data at n = 3") {
    GreenRing R(3);
    CHECK(R.f(1) == YPoly{Int(-1), Int(0), Int(1)});           // y^2 - 1
    CHECK(R.f(2) == YPoly{Int(-2), Int(-3), Int(0), Int(1)});  // y^3 - 3y - 2
    CHECK(R.f(3) == YPoly{Int(1)});                            // 1
    CHECK(R.f(4) == YPoly{Int(0), Int(1)});                    // y
    CHECK(R.g(1) == YPoly{Int(-2), Int(0), Int(1)});           // y^2 - 2
    CHECK(R.g(2) == YPoly{Int(0), Int(1)});                    // y
    CHECK(R.g(3) == YPoly{Int(-1), Int(0), Int(1)});           // y^2 - 1
    CHECK(R.g(4) == YPoly{Int(1), Int(1)});                    // y + 1
}

TEST_CASE("reduction examples") {
    GreenRing R(3);
    // x1 * x1 = g4 x2 = (y+1) x2
    GreenElem prod = R.mul(R.gen_x(1), R.gen_x(1));
    GreenElem expect = R.reduce(GreenElem::raw_mul(R.from_poly(R.g(4)), R.gen_x(2)));
    CHECK(prod == expect);
    CHECK(R.to_string(prod) == "x2 + y*x2");

    // z+ z- = 1 + f1 (2y + 4 f3)
    GreenElem zz = R.mul(R.gen_zp(1), R.gen_zm(1));
    YPoly rhs = poly_add(YPoly{Int(1)},
                         poly_mul(R.f(1), poly_add(YPoly{Int(0), Int(2)},
                                                   poly_scale(R.f(3), Int(4)))));
    CHECK(zz == R.reduce(R.from_poly(rhs)));

    // f1 f2 = (y^2-1)(y^3-3y-2) reduces to zero.
    YPoly lit = poly_mul(YPoly{Int(-1), Int(0), Int(1)}, YPoly{Int(-2), Int(-3), Int(0), Int(1)});
    CHECK(R.reduce(R.from_poly(lit)).is_zero());

    // (g1 - g2) x_t = (y^2 - y - 2) x_t reduces to zero.
    for (int t = 1; t <= 2; ++t) {
        GreenElem e = GreenElem::raw_mul(R.from_poly(YPoly{Int(-2), Int(-1), Int(1)}), R.gen_x(t));
        CHECK(R.reduce(e).is_zero());
    }

    // y [V_n] = [P_{n-1}]
    GreenElem yVn = R.mul(R.gen_y(1), R.from_label(IndecompLabel::simple(3)));
    CHECK(yVn == R.from_label(IndecompLabel::proj(2)));
}

TEST_CASE("multiplication: unit, x-eps collapse, associativity, commutativity") {
    for (int n : {3, 5}) {
        GreenRing R(n);
        Prng rng(0xC0FFEE ^ n);
        GreenElem a = random_elem(R, rng);
        CHECK(R.mul(R.one(), a) == R.reduce(a));

        for (int t = 1; t <= n - 1; ++t)
            for (int t2 = 1; t2 <= n - 1; ++t2) {
                CHECK(R.mul(R.gen_x(t), R.gen_eps(t2)) == R.mul(R.gen_x(t), R.gen_x(t2)));
                if (t + t2 != n)
                    CHECK(R.mul(R.gen_eps(t), R.gen_eps(t2)) == R.mul(R.gen_x(t), R.gen_x(t2)));
            }

        for (int trial = 0; trial < 100; ++trial) {
            GreenElem x = random_elem(R, rng);
            GreenElem y = random_elem(R, rng);
            GreenElem z = random_elem(R, rng);
            CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
            CHECK(R.mul(x, y) == R.mul(y, x));
        }
    }
}

TEST_CASE("normal forms are fixed points of reduce") {
    GreenRing R(3);
    const int n = 3;
    std::vector<GreenElem> normals;
    for (int j = 0; j <= 2 * n - 2; ++j) normals.push_back(R.gen_y(j));
    for (int t = 1; t <= n - 1; ++t) {
        for (int k = 0; 2 * k <= n - 1; ++k)
            normals.push_back(GreenElem::raw_mul(R.gen_y(k), R.gen_x(t)));
        for (int i = 0; 2 * i <= n - 3; ++i)
            normals.push_back(GreenElem::raw_mul(R.gen_y(i), R.gen_eps(t)));
    }
    for (int l = 0; l <= n - 2; ++l)
        for (int s = 1; s <= 3; ++s) {
            normals.push_back(GreenElem::raw_mul(R.gen_y(l), R.gen_zp(s)));
            normals.push_back(GreenElem::raw_mul(R.gen_y(l), R.gen_zm(s)));
            normals.push_back(GreenElem::raw_mul(R.gen_y(l), R.gen_w(s, "inf")));
        }
    for (const auto& m : normals) CHECK(R.reduce(m) == m);
}

TEST_CASE("normal basis counts give the presentation ranks") {
    GreenRing R3(3);
    CHECK(R3.normal_basis_count("y") == 5);       // 2n-1
    CHECK(R3.normal_basis_count("proj") == 11);   // n^2+n-1
    GreenRing R5(5);
    CHECK(R5.normal_basis_count("y") == 9);
    CHECK(R5.normal_basis_count("proj") == 29);
}

TEST_CASE("classes of indecomposables") {
    GreenRing R(3);
    const int n = 3;
    CHECK(R.from_label(IndecompLabel::simple(1)) == R.one());
    CHECK(R.from_label(IndecompLabel::simple(2)) == R.gen_y(1));
    for (int t = 1; t <= n - 1; ++t) {
        CHECK(R.from_label(IndecompLabel::block_simple(t, 0, n)) == R.gen_x(t));
        CHECK(R.from_label(IndecompLabel::block_simple(t, 1, n)) == R.gen_eps(t));
        // [V(t,2)] = (y^2-2) eps_t - x_t
        GreenElem expect = R.reduce(
            GreenElem::raw_mul(R.from_poly(YPoly{Int(-2), Int(0), Int(1)}), R.gen_eps(t)) -
            R.gen_x(t));
        CHECK(R.from_label(IndecompLabel::block_simple(t, 2, n)) == expect);
    }
    CHECK(R.from_label(IndecompLabel::syzygy(+1, 1, 1)) == R.gen_zp(1));
    CHECK(R.from_label(IndecompLabel::syzygy(-1, 1, 1)) == R.gen_zm(1));
    CHECK(R.from_label(IndecompLabel::band(2, 1, "inf")) == R.gen_w(2, "inf"));
    CHECK_THROWS_AS(R.from_label(IndecompLabel::band(1, 2, "inf")), NotExpressible);
    CHECK_THROWS_AS(R.from_label(IndecompLabel::syzygy(+1, 2, 1)), NotExpressible);
    // Registered derived classes become available.
    GreenRing R2(3);
    R2.register_derived_class(IndecompLabel::syzygy(+1, 2, 1), R2.gen_zp(2));
    CHECK(R2.from_label(IndecompLabel::syzygy(+1, 2, 1)) == R2.gen_zp(2));
}

TEST_CASE("presentation generators all reduce to zero") {
    for (int n : {3, 5}) {
        GreenRing R(n);
        for (const auto& check : R.check_presentations(3)) {
            CAPTURE(check.set_name);
            CAPTURE(check.relation);
            CAPTURE(check.residue);
            CHECK(check.ok);
        }
    }
}

TEST_CASE("two-orbit ladder identities") {
    for (int n : {3, 5}) {
        GreenRing R(n);
        for (int t = 1; t <= n - 1; ++t)
            for (int r = 1; r <= n - 1; ++r) {
                GreenElem lhs_x =
                    R.reduce(GreenElem::raw_mul(R.from_poly(ladder_poly(r)), R.gen_x(t)));
                GreenElem lhs_e =
                    R.reduce(GreenElem::raw_mul(R.from_poly(ladder_poly(r)), R.gen_eps(t)));
                int a, b;
                if (r % 2 == 1) {
                    a = (n - r) / 2;
                    b = (n + r) / 2;
                } else {
                    a = -r / 2;
                    b = r / 2;
                }
                GreenElem rhs_x = R.from_label(IndecompLabel::block_simple(t, a, n)) +
                                  R.from_label(IndecompLabel::block_simple(t, b, n));
                GreenElem rhs_e = R.from_label(IndecompLabel::block_simple(t, a + 1, n)) +
                                  R.from_label(IndecompLabel::block_simple(t, b + 1, n));
                CHECK(lhs_x == rhs_x);
                CHECK(lhs_e == rhs_e);
            }
        // g4 x_t is the full orbit sum.
        for (int t = 1; t <= n - 1; ++t) {
            GreenElem orbit;
            for (int j = 0; j < n; ++j)
                orbit = orbit + R.from_label(IndecompLabel::block_simple(t, j, n));
            CHECK(R.reduce(GreenElem::raw_mul(R.from_poly(R.g(4)), R.gen_x(t))) == orbit);
        }
    }
}

TEST_CASE("projective sum identities") {
    for (int n : {3, 5}) {
        GreenRing R(n);
        // sum_{i=0}^{(n-1)/2} [P_{2i+1}] = [V_n]^2, with P_n = V_n.
        GreenElem sum_odd;
        for (int i = 0; 2 * i + 1 <= n; ++i) {
            int l = 2 * i + 1;
            sum_odd = sum_odd + (l == n ? R.from_label(IndecompLabel::simple(n))
                                        : R.from_label(IndecompLabel::proj(l)));
        }
        CHECK(sum_odd == R.reduce(R.from_poly(poly_mul(R.f(1), R.f(1)))));
        // sum_{i>=1} [P_{2i+1}] = f3 [V_n], sum_{i>=1} [P_{2i}] = f4 [V_n].
        GreenElem s1, s2;
        for (int i = 1; 2 * i + 1 <= n - 1; ++i)
            s1 = s1 + R.from_label(IndecompLabel::proj(2 * i + 1));
        if (n % 2 == 1 && n >= 3)  // the 2i+1 = n term is [V_n], not a P_l
            for (int i = 1; 2 * i + 1 <= n; ++i)
                if (2 * i + 1 == n) s1 = s1 + R.from_label(IndecompLabel::simple(n));
        for (int i = 1; 2 * i <= n - 1; ++i) s2 = s2 + R.from_label(IndecompLabel::proj(2 * i));
        CHECK(s1 == R.reduce(R.from_poly(poly_mul(R.f(3), R.f(1)))));
        CHECK(s2 == R.reduce(R.from_poly(poly_mul(R.f(4), R.f(1)))));
        // z± [V_n] = (1 + 2 f4) [V_n]
        GreenElem vn = R.from_label(IndecompLabel::simple(n));
        GreenElem rhs = R.reduce(GreenElem::raw_mul(
            R.from_poly(poly_add(YPoly{Int(1)}, poly_scale(R.f(4), Int(2)))), vn));
        CHECK(R.mul(R.gen_zp(1), vn) == rhs);
        CHECK(R.mul(R.gen_zm(1), vn) == rhs);
    }
}

TEST_CASE("stable quotient") {
    for (int n : {3, 5}) {
        GreenRing R(n);
        // z+ z- = 1 in the stable ring.
        CHECK(R.stable_reduce(GreenElem::raw_mul(R.gen_zp(1), R.gen_zm(1))) == R.one());
        // Projective classes vanish.
        CHECK(R.stable_reduce(R.from_label(IndecompLabel::simple(n))).is_zero());
        CHECK(R.stable_reduce(R.from_label(IndecompLabel::proj(1))).is_zero());
        CHECK(R.stable_reduce(R.gen_x(1)).is_zero());
        // The quotient map factors through reduce.
        Prng rng(0xBEEF ^ n);
        for (int trial = 0; trial < 40; ++trial) {
            GreenElem e = random_elem(R, rng);
            CHECK(R.stable_reduce(R.reduce(e)) == R.stable_reduce(e));
        }
    }
}

TEST_CASE("expression parser") {
    GreenRing R(3);
    CHECK(R.reduce(parse_green_expr(R, "z+*z-")) == R.mul(R.gen_zp(1), R.gen_zm(1)));
    CHECK(R.reduce(parse_green_expr(R, "x1*x1")) == R.mul(R.gen_x(1), R.gen_x(1)));
    CHECK(R.reduce(parse_green_expr(R, "y^2 - 1")) ==
          R.reduce(R.from_poly(YPoly{Int(-1), Int(0), Int(1)})));
    CHECK(R.reduce(parse_green_expr(R, "2*e2 + w1,inf - (y - 3)*x1")) ==
          R.reduce(R.gen_eps(2).scaled(Int(2)) + R.gen_w(1, "inf") -
                   GreenElem::raw_mul(R.gen_y(1) - R.one().scaled(Int(3)), R.gen_x(1))));
    CHECK_THROWS_AS(parse_green_expr(R, "x9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_green_expr(R, "y +"), ParseError);
    CHECK_THROWS_AS(parse_green_expr(R, "w2"), ParseError);
    CHECK_THROWS_AS(parse_green_expr(R, "q"), ParseError);
}
