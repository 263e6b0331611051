#include "qqg/rep.hpp"

#include <stdexcept>

namespace qqg {

std::optional<std::vector<int>> Representation::weights() const {
    if (!K.is_diagonal()) return std::nullopt;
    std::vector<int> w(dim);
    for (int i = 0; i < dim; ++i) {
        int k = ctx->root_power_index(K.at(i, i));
        if (k < 0) return std::nullopt;
        w[i] = k;
    }
    return w;
}

ValidationReport validate(const Representation& M) {
    ValidationReport rep;
    if (M.dim == 0) return rep;
    const CycloContext& cy = *M.ctx;
    const int n = cy.n();
    Mat I = Mat::identity(M.ctx, M.dim);

    if (M.K * M.Kinv != I) rep.violations.push_back("K K^-1 != 1");
    if (M.K.pow(cy.m()) != I) rep.violations.push_back("K^{n^2} != 1");
    if (!M.E.pow(n).is_zero()) rep.violations.push_back("E^n != 0");
    if (!M.F.pow(n).is_zero()) rep.violations.push_back("F^n != 0");
    if (M.K * M.E * M.Kinv != M.E.scaled(cy.q_power(2)))
        rep.violations.push_back("K E K^-1 != q^2 E");
    if (M.K * M.F * M.Kinv != M.F.scaled(cy.q_power(-2)))
        rep.violations.push_back("K F K^-1 != q^-2 F");
    CycloNum lambda = (cy.q_power(1) - cy.q_power(-1)).inverse();
    if (M.E * M.F - M.F * M.E != (M.K - M.Kinv).scaled(lambda))
        rep.violations.push_back("[E,F] != (K - K^-1)/(q - q^-1)");
    return rep;
}

Representation simple_V(const Algebra& alg, int l) {
    const CycloContext& cy = alg.cy();
    const int n = alg.n();
    if (l < 1 || l > n) throw std::invalid_argument("simple_V: l out of range");
    Representation M;
    M.ctx = &cy;
    M.dim = l;
    M.E = Mat(&cy, l, l);
    M.F = Mat(&cy, l, l);
    M.K = Mat(&cy, l, l);
    M.Kinv = Mat(&cy, l, l);
    // E m_i = m_{i+1} (i < l), F m_i = beta_{i-1}(l) m_{i-1}, K m_i = q^{2i-l-1} m_i.
    for (int i = 1; i <= l; ++i) {
        M.K.at(i - 1, i - 1) = cy.q_power(2 * i - l - 1);
        M.Kinv.at(i - 1, i - 1) = cy.q_power(-(2 * i - l - 1));
        if (i < l) M.E.at(i, i - 1) = cy.one();
        if (i > 1) {
            int j = i - 1;  // beta_j(l), 1 <= j <= l-1
            CycloNum alpha = cy.q_integer(j, cy.q_power(2)) * (cy.one() - cy.q_power(2L * (j - l)));
            CycloNum beta = alpha * (cy.q_power(2L * j - l) - cy.q_power(2L * j - l - 2)).inverse();
            M.F.at(i - 2, i - 1) = beta;
        }
    }
    M.label = IndecompLabel::simple(l);
    return M;
}

Representation block_simple_V(const Algebra& alg, int t, int r) {
    const CycloContext& cy = alg.cy();
    const int n = alg.n();
    if (t < 1 || t > n - 1) throw std::invalid_argument("block_simple_V: t out of range");
    r = ((r % n) + n) % n;
    Representation M;
    M.ctx = &cy;
    M.dim = n;
    M.E = Mat(&cy, n, n);
    M.F = Mat(&cy, n, n);
    M.K = Mat(&cy, n, n);
    M.Kinv = Mat(&cy, n, n);
    CycloNum lambda = (cy.q_power(1) - cy.q_power(-1)).inverse();
    for (int i = 1; i <= n; ++i) {
        // K v_i = zeta^t q^{2(r+i-1)} v_i
        long e = t + 2L * n * (r + i - 1);
        M.K.at(i - 1, i - 1) = cy.root_power(e);
        M.Kinv.at(i - 1, i - 1) = cy.root_power(-e);
        if (i < n) M.E.at(i, i - 1) = cy.one();
        if (i > 1) {
            int j = i - 1;  // gamma_j, 1 <= j <= n-1
            CycloNum g = (cy.root_power(-t) *
                              (cy.q_power(-2L * r) - cy.q_power(-2L * (r + j))) *
                              (cy.one() - cy.q_power(-2)).inverse() -
                          cy.root_power(t) *
                              (cy.q_power(2L * r) - cy.q_power(2L * (r + j))) *
                              (cy.one() - cy.q_power(2)).inverse()) *
                         lambda;
            if (g.is_zero())
                throw std::logic_error("block_simple_V: vanishing gamma_" + std::to_string(j));
            M.F.at(i - 2, i - 1) = g;
        }
    }
    M.label = IndecompLabel::block_simple(t, r, n);
    return M;
}

namespace {

// Express an algebra element in the basis {E^s F^l T} where T's PBW support
// at fixed (s,l) is a known pattern: slices by (a,b) are scalar multiples of
// the corresponding basis slice.
struct RegularBasis {
    const Algebra* alg;
    int n;
    std::vector<AlgebraElem> elems;  // index s*n + l

    std::vector<CycloNum> coords(const AlgebraElem& x) const {
        const CycloContext& cy = alg->cy();
        std::vector<CycloNum> out((size_t)n * n, cy.zero());
        // Split x by (a,b) exponent pair.
        std::map<std::pair<int, int>, AlgebraElem> slices;
        for (const auto& [mono, c] : x.terms()) {
            auto& sl = slices[{mono.a, mono.b}];
            if (!sl.algebra()) sl = AlgebraElem(alg);
            sl.add_term(mono, c);
        }
        for (auto& [ab, slice] : slices) {
            const AlgebraElem& basis = elems[(size_t)ab.first * n + ab.second];
            // slice = scalar * basis; read the scalar off the first term.
            const auto& [m0, c0] = *basis.terms().begin();
            auto it = slice.terms().find(m0);
            if (it == slice.terms().end())
                throw std::logic_error("regular module: element leaves the invariant basis");
            CycloNum scal = it->second * c0.inverse();
            if (basis.scaled(scal) != slice)
                throw std::logic_error("regular module: slice is not proportional to basis");
            out[(size_t)ab.first * n + ab.second] = scal;
        }
        return out;
    }
};

}  // namespace

Representation regular_submodule(const Algebra& alg, int i, int j) {
    const CycloContext& cy = alg.cy();
    const int n = alg.n();
    AlgebraElem T = alg.sub_idempotent(i, j);

    RegularBasis basis{&alg, n, {}};
    basis.elems.reserve((size_t)n * n);
    for (int s = 0; s < n; ++s)
        for (int l = 0; l < n; ++l)
            basis.elems.push_back(alg.monomial(s, l, 0, cy.one()) * T);

    int d = n * n;
    Representation M;
    M.ctx = &cy;
    M.dim = d;
    M.E = Mat(&cy, d, d);
    M.F = Mat(&cy, d, d);
    M.K = Mat(&cy, d, d);
    M.Kinv = Mat(&cy, d, d);
    AlgebraElem E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(1), Kinv = alg.gen_K(alg.m() - 1);
    for (int col = 0; col < d; ++col) {
        const AlgebraElem& b = basis.elems[col];
        auto fill = [&](Mat& target, const AlgebraElem& g) {
            std::vector<CycloNum> v = basis.coords(g * b);
            for (int row = 0; row < d; ++row) target.at(row, col) = v[row];
        };
        fill(M.E, E);
        fill(M.F, F);
        fill(M.K, K);
        fill(M.Kinv, Kinv);
    }
    return M;
}

Representation direct_sum(const Algebra& alg, const std::vector<Representation>& parts) {
    const CycloContext& cy = alg.cy();
    Representation M;
    M.ctx = &cy;
    M.dim = 0;
    for (const auto& p : parts) M.dim += p.dim;
    M.E = Mat(&cy, M.dim, M.dim);
    M.F = Mat(&cy, M.dim, M.dim);
    M.K = Mat(&cy, M.dim, M.dim);
    M.Kinv = Mat(&cy, M.dim, M.dim);
    int off = 0;
    for (const auto& p : parts) {
        for (int r = 0; r < p.dim; ++r)
            for (int c = 0; c < p.dim; ++c) {
                M.E.at(off + r, off + c) = p.E.at(r, c);
                M.F.at(off + r, off + c) = p.F.at(r, c);
                M.K.at(off + r, off + c) = p.K.at(r, c);
                M.Kinv.at(off + r, off + c) = p.Kinv.at(r, c);
            }
        off += p.dim;
    }
    return M;
}

Mat weight_projection(const Representation& M, int s) {
    const CycloContext& cy = *M.ctx;
    const int m = cy.m();
    auto w = M.weights();
    Mat P(M.ctx, M.dim, M.dim);
    if (w) {
        int target = ((m - s) % m + m) % m;  // 1_s keeps eigenvalue zeta^{-s}
        for (int idx = 0; idx < M.dim; ++idx)
            if ((*w)[idx] == target) P.at(idx, idx) = cy.one();
        return P;
    }
    // Fall back to the character sum (1/m) sum_r zeta^{sr} K^r.
    Mat Kr = Mat::identity(M.ctx, M.dim);
    Rat inv_m(1, m);
    for (int r = 0; r < m; ++r) {
        P = P + Kr.scaled(cy.root_power((long)s * r).scaled(inv_m));
        Kr = Kr * M.K;
    }
    return P;
}

// Eigenprojection onto weight indices f in [lo, hi] (f is the index with
// 1_f v = v, i.e. f = m - weight mod m).
static Mat window_projection(const Representation& M, int lo, int hi) {
    const CycloContext& cy = *M.ctx;
    const int m = cy.m();
    auto w = M.weights();
    if (w) {
        Mat P(M.ctx, M.dim, M.dim);
        for (int idx = 0; idx < M.dim; ++idx) {
            int f = (m - (*w)[idx]) % m;
            if (f >= lo && f <= hi) P.at(idx, idx) = cy.one();
        }
        return P;
    }
    Mat P(M.ctx, M.dim, M.dim);
    for (int s = lo; s <= hi; ++s) P = P + weight_projection(M, s);
    return P;
}

Representation tensor(const Algebra& alg, const Representation& M, const Representation& N) {
    const CycloContext& cy = alg.cy();
    if (M.ctx != &cy || N.ctx != &cy)
        throw std::invalid_argument("tensor: context mismatch");
    const int n = alg.n();
    const int m = alg.m();

    Representation R;
    R.ctx = &cy;
    R.dim = M.dim * N.dim;
    Mat I_N = Mat::identity(&cy, N.dim);
    Mat I_M = Mat::identity(&cy, M.dim);

    R.K = M.K.kron(N.K);
    R.Kinv = M.Kinv.kron(N.Kinv);

    Mat T1 = window_projection(M, 0, 2 * n - 1);
    Mat T2 = window_projection(M, 2 * n, m - 1);
    Mat T3 = window_projection(M, 0, m - 2 * n - 1);
    Mat T4 = window_projection(M, m - 2 * n, m - 1);

    R.E = (M.E * T1).kron(N.Kinv.pow(n)) + (M.E * T2).kron(I_N) + M.K.kron(N.E);
    R.F = (M.F * T3).kron(N.Kinv) + (M.F * T4).kron(N.K.pow(n - 1)) + I_M.kron(N.F);

    ValidationReport v = validate(R);
    if (!v.ok()) throw std::logic_error("tensor: result violates " + v.violations.front());
    return R;
}

Mat act(const Algebra& alg, const AlgebraElem& x, const Representation& M) {
    Mat R(M.ctx, M.dim, M.dim);
    for (const auto& [mono, c] : x.terms()) {
        Mat term = M.E.pow(mono.a) * M.F.pow(mono.b) * M.K.pow(mono.c);
        R = R + term.scaled(c);
    }
    return R;
}

std::optional<int> block_index(const Representation& M) {
    const CycloContext& cy = *M.ctx;
    const int n = cy.n();
    if (M.dim == 0) return 0;
    Mat Kn = M.K.pow(n);
    const CycloNum& s = Kn.at(0, 0);
    if (Kn != Mat::identity(M.ctx, M.dim).scaled(s)) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (s == cy.q_power(n - i)) return i;
    return std::nullopt;
}

Mat associator_matrix(const Algebra& alg, const Representation& M, const Representation& N,
                      const Representation& P) {
    const CycloContext& cy = alg.cy();
    const int m = alg.m();
    auto wM = M.weights(), wN = N.weights(), wP = P.weights();
    if (!wM || !wN || !wP)
        throw std::invalid_argument("associator_matrix requires diagonal K actions");
    int d = M.dim * N.dim * P.dim;
    Mat A(&cy, d, d);
    for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < N.dim; ++j)
            for (int k = 0; k < P.dim; ++k) {
                int f = (m - (*wM)[i]) % m;
                int g = (m - (*wN)[j]) % m;
                int h = (m - (*wP)[k]) % m;
                int idx = (i * N.dim + j) * P.dim + k;
                A.at(idx, idx) = alg.associator_scalar(f, g, h);
            }
    return A;
}

}  // namespace qqg
