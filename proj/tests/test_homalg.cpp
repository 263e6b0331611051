#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qqg/homalg.hpp"

using namespace qqg;

namespace {

struct Fixture {
    std::shared_ptr<const CycloContext> cy;
    Algebra alg;
    Engine eng;
    Fixture(int n = 3) : cy(make_context(n)), alg(cy), eng(alg, 0xC0FFEE) {}
};

}  // namespace

TEST_CASE("hom spaces between simples obey Schur") {
    Fixture fx;
    const int n = 3;
    for (int t = 1; t <= n - 1; ++t)
        for (int r = 0; r < n; ++r)
            for (int t2 = 1; t2 <= n - 1; ++t2)
                for (int r2 = 0; r2 < n; ++r2) {
                    int expect = (t == t2 && r == r2) ? 1 : 0;
                    CHECK(fx.eng.hom_space(block_simple_V(fx.alg, t, r),
                                           block_simple_V(fx.alg, t2, r2 + n))
                              .dim() == expect);
                }
    for (int l = 1; l <= n; ++l)
        for (int l2 = 1; l2 <= n; ++l2)
            CHECK(fx.eng.hom_space(simple_V(fx.alg, l), simple_V(fx.alg, l2)).dim() ==
                  (l == l2 ? 1 : 0));
}

TEST_CASE("isomorphism search") {
    Fixture fx;
    Representation B = block_simple_V(fx.alg, 1, 0);
    CHECK(fx.eng.find_isomorphism(B, B).status == IsoStatus::Found);
    CHECK(fx.eng.find_isomorphism(block_simple_V(fx.alg, 1, 2),
                                  block_simple_V(fx.alg, 1, 5))
              .status == IsoStatus::Found);
    // V_2 vs V_1 (+) V_1: definitively non-isomorphic.
    Representation sum = direct_sum(fx.alg, {simple_V(fx.alg, 1), simple_V(fx.alg, 1)});
    CHECK(fx.eng.find_isomorphism(simple_V(fx.alg, 2), sum).status == IsoStatus::None);
    // Dimension mismatch is an immediate none.
    CHECK(fx.eng.find_isomorphism(simple_V(fx.alg, 2), simple_V(fx.alg, 3)).status ==
          IsoStatus::None);
}

TEST_CASE("projective ladder: P_l has dimension 2n, right socle and top") {
    for (int n : {3, 5}) {
        Fixture fx(n);
        for (int l = 1; l <= n - 1; ++l) {
            const Representation& P = fx.eng.projective(l);
            CHECK(P.dim == 2 * n);
            CHECK(validate(P).ok());
            // socle(P_l) ~ V_l ~ top(P_l)
            SubQuot soc = fx.eng.socle(P);
            CHECK(soc.rep.dim == l);
            CHECK(fx.eng.find_isomorphism(soc.rep, simple_V(fx.alg, l)).status ==
                  IsoStatus::Found);
            SubQuot t = fx.eng.top(P);
            CHECK(t.rep.dim == l);
            CHECK(fx.eng.find_isomorphism(t.rep, simple_V(fx.alg, l)).status == IsoStatus::Found);
        }
    }
}

TEST_CASE("radical of a simple vanishes") {
    Fixture fx;
    for (int l = 1; l <= 3; ++l) CHECK(fx.eng.radical(simple_V(fx.alg, l)).rep.dim == 0);
    CHECK(fx.eng.radical(block_simple_V(fx.alg, 1, 0)).rep.dim == 0);
}

TEST_CASE("verify_claim on the tensor examples") {
    Fixture fx;
    const int n = 3;
    // V_2 (x) V(1,0) = V(1,1) (+) V(1,2)
    {
        Representation M = tensor(fx.alg, simple_V(fx.alg, 2), block_simple_V(fx.alg, 1, 0));
        DecompClaim claim;
        claim[IndecompLabel::block_simple(1, 1, n)] = 1;
        claim[IndecompLabel::block_simple(1, 2, n)] = 1;
        ClaimResult res = fx.eng.verify_claim(M, claim);
        CHECK(res.status == IsoStatus::Found);
        // The witness is an invertible intertwiner.
        Representation claimed = fx.eng.construct(claim);
        CHECK(inverse(res.witness).has_value());
        CHECK(res.witness * claimed.E == M.E * res.witness);
    }
    // V(1,0) (x) V(1,0) = V(2,0) (+) V(2,1) (+) V(2,2)
    {
        Representation M =
            tensor(fx.alg, block_simple_V(fx.alg, 1, 0), block_simple_V(fx.alg, 1, 0));
        DecompClaim claim;
        for (int j = 0; j < n; ++j) claim[IndecompLabel::block_simple(2, j, n)] = 1;
        CHECK(fx.eng.verify_claim(M, claim).status == IsoStatus::Found);
    }
    // V(1,0) (x) V(2,0) = P_2 (+) V_3   (u = 0 regime)
    {
        Representation M =
            tensor(fx.alg, block_simple_V(fx.alg, 1, 0), block_simple_V(fx.alg, 2, 0));
        DecompClaim claim;
        claim[IndecompLabel::proj(2)] = 1;
        claim[IndecompLabel::simple(3)] = 1;
        CHECK(fx.eng.verify_claim(M, claim).status == IsoStatus::Found);
    }
    // A wrong claim is refuted with diagnostics.
    {
        Representation M = tensor(fx.alg, simple_V(fx.alg, 2), block_simple_V(fx.alg, 1, 0));
        DecompClaim wrong;
        wrong[IndecompLabel::block_simple(1, 0, n)] = 2;
        ClaimResult res = fx.eng.verify_claim(M, wrong);
        CHECK(res.status != IsoStatus::Found);
        CHECK(!res.diagnostics.empty());
    }
}

TEST_CASE("projective covers") {
    Fixture fx;
    const int n = 3;
    for (int l = 1; l <= n - 1; ++l) {
        CoverResult cov = fx.eng.projective_cover(simple_V(fx.alg, l));
        CHECK(cov.P.dim == 2 * n);
        CHECK(rank(cov.surjection) == l);
    }
    CoverResult covn = fx.eng.projective_cover(simple_V(fx.alg, n));
    CHECK(covn.P.dim == n);
    CoverResult covb = fx.eng.projective_cover(block_simple_V(fx.alg, 1, 0));
    CHECK(covb.P.dim == n);
}

TEST_CASE("syzygy dimension laws and inverses") {
    Fixture fx;
    const int n = 3;
    for (int l = 1; l <= n - 1; ++l) {
        Representation V = simple_V(fx.alg, l);
        for (int s = 1; s <= 4; ++s) {
            Representation O = fx.eng.syzygy(V, +1, s);
            int expect = (s % 2 == 1) ? s * n + (n - l) : s * n + l;
            CHECK(O.dim == expect);
            CHECK(validate(O).ok());
            Representation Om = fx.eng.syzygy(V, -1, s);
            CHECK(Om.dim == expect);
        }
        // Omega^{-1} Omega V_l ~ V_l
        Representation round = fx.eng.syzygy(fx.eng.syzygy(V, +1, 1), -1, 1);
        CHECK(fx.eng.find_isomorphism(round, V).status == IsoStatus::Found);
    }
}

TEST_CASE("peeling projective summands") {
    Fixture fx;
    const int n = 3;
    // peel(P_2 (+) V_3) -> everything projective, stable part 0
    {
        Representation M = direct_sum(fx.alg, {fx.eng.projective(2), simple_V(fx.alg, 3)});
        PeelResult res = fx.eng.peel_projectives(M);
        CHECK(res.stable.dim == 0);
        DecompClaim expect;
        expect[IndecompLabel::proj(2)] = 1;
        expect[IndecompLabel::simple(3)] = 1;
        CHECK(res.projectives == expect);
    }
    // peel(V_2 (x) V_3) -> {P_2}, stable 0
    {
        Representation M = tensor(fx.alg, simple_V(fx.alg, 2), simple_V(fx.alg, 3));
        PeelResult res = fx.eng.peel_projectives(M);
        CHECK(res.stable.dim == 0);
        DecompClaim expect;
        expect[IndecompLabel::proj(2)] = 1;
        CHECK(res.projectives == expect);
    }
    // peel(Omega V_1 (x) Omega^{-1} V_1) -> stable part ~ V_1
    {
        Representation Zp = fx.eng.syzygy(simple_V(fx.alg, 1), +1, 1);
        Representation Zm = fx.eng.syzygy(simple_V(fx.alg, 1), -1, 1);
        Representation M = tensor(fx.alg, Zp, Zm);
        PeelResult res = fx.eng.peel_projectives(M);
        CHECK(res.stable.dim == 1);
        CHECK(fx.eng.find_isomorphism(res.stable, simple_V(fx.alg, 1)).status ==
              IsoStatus::Found);
    }
}

TEST_CASE("semisimple decomposition") {
    Fixture fx;
    const int n = 3;
    // H T^i_j decomposes as one copy of each V(n-i, r).
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            Representation R = regular_submodule(fx.alg, i, j);
            DecompClaim claim = fx.eng.decompose_semisimple(R);
            DecompClaim expect;
            for (int r = 0; r < n; ++r) expect[IndecompLabel::block_simple(n - i, r, n)] = 1;
            CHECK(claim == expect);
            CHECK(fx.eng.verify_claim(R, expect).status == IsoStatus::Found);
        }
    // P_l (x) V(t,r) = (+)_j 2 V(t,j)
    {
        Representation M = tensor(fx.alg, fx.eng.projective(1), block_simple_V(fx.alg, 2, 1));
        DecompClaim expect;
        for (int j = 0; j < n; ++j) expect[IndecompLabel::block_simple(2, j, n)] = 2;
        CHECK(fx.eng.decompose_semisimple(M) == expect);
        CHECK(fx.eng.verify_claim(M, expect).status == IsoStatus::Found);
    }
    // Krull-Schmidt additivity on direct sums.
    {
        Representation A = block_simple_V(fx.alg, 1, 0);
        Representation B = tensor(fx.alg, simple_V(fx.alg, 2), block_simple_V(fx.alg, 1, 2));
        Representation S = direct_sum(fx.alg, {A, B});
        DecompClaim dA = fx.eng.decompose_semisimple(A);
        DecompClaim dB = fx.eng.decompose_semisimple(B);
        DecompClaim dS = fx.eng.decompose_semisimple(S);
        DecompClaim merged = dA;
        for (auto& [lab, mult] : dB) merged[lab] += mult;
        CHECK(dS == merged);
    }
}

TEST_CASE("composition multiplicities and the projective tensor reduction") {
    Fixture fx;
    const int n = 3;
    // Omega V_1 has factors V_1 (mult 1) and V_{n-1} (mult 2).
    Representation O = fx.eng.syzygy(simple_V(fx.alg, 1), +1, 1);
    std::vector<int> mult = fx.eng.composition_multiplicities(O);
    CHECK(mult[1] == 1);
    CHECK(mult[n - 1] == 2);
    CHECK(mult[n] == 0);

    // M (x) P = (+)_j l_j (S_j (x) P) for projective P, here P = V(t,r).
    Representation P = block_simple_V(fx.alg, 1, 0);
    Representation MP = tensor(fx.alg, O, P);
    DecompClaim expect;
    for (int l = 1; l <= n; ++l) {
        if (mult[l] == 0) continue;
        Representation SP = tensor(fx.alg, simple_V(fx.alg, l), P);
        for (auto& [lab, m2] : fx.eng.decompose_semisimple(SP)) expect[lab] += mult[l] * m2;
    }
    CHECK(fx.eng.verify_claim(MP, expect).status == IsoStatus::Found);
}

TEST_CASE("full decomposition dispatch") {
    Fixture fx;
    const int n = 3;
    // Mixed-block module.
    Representation M = direct_sum(
        fx.alg, {simple_V(fx.alg, 2), block_simple_V(fx.alg, 1, 0), fx.eng.projective(2)});
    auto claim = fx.eng.decompose(M);
    REQUIRE(claim.has_value());
    DecompClaim expect;
    expect[IndecompLabel::simple(2)] = 1;
    expect[IndecompLabel::block_simple(1, 0, n)] = 1;
    expect[IndecompLabel::proj(2)] = 1;
    CHECK(*claim == expect);

    // A syzygy is identified as such.
    Representation O2 = fx.eng.syzygy(simple_V(fx.alg, 2), +1, 2);
    auto c2 = fx.eng.decompose(O2);
    REQUIRE(c2.has_value());
    DecompClaim e2;
    e2[IndecompLabel::syzygy(+1, 2, 2)] = 1;
    CHECK(*c2 == e2);
}
