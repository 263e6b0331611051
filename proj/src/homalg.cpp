#include "qqg/homalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qqg {

Representation induced_sub(const Representation& M, const Mat& incl) {
    Representation S;
    S.ctx = M.ctx;
    S.dim = incl.cols();
    if (S.dim == 0) {
        S.E = S.F = S.K = S.Kinv = Mat(M.ctx, 0, 0);
        return S;
    }
    S.E = solve_exact(incl, M.E * incl);
    S.F = solve_exact(incl, M.F * incl);
    S.K = solve_exact(incl, M.K * incl);
    S.Kinv = solve_exact(incl, M.Kinv * incl);
    return S;
}

Representation induced_quotient(const Representation& M, const Mat& incl, Mat* proj_out) {
    // Complement coordinates: unit vectors at non-pivot rows of the
    // echelonized inclusion.
    Mat cs = column_space(incl);
    std::vector<bool> pivot_row(M.dim, false);
    {
        // Leading row of each echelon column is a pivot row.
        for (int c = 0; c < cs.cols(); ++c)
            for (int r = 0; r < M.dim; ++r)
                if (!cs.at(r, c).is_zero()) {
                    pivot_row[r] = true;
                    break;
                }
    }
    int k = M.dim - cs.cols();
    Mat sec(M.ctx, M.dim, k);
    {
        int col = 0;
        for (int r = 0; r < M.dim; ++r)
            if (!pivot_row[r]) sec.at(r, col++) = M.ctx->one();
    }
    Mat A = cs.hcat(sec);
    auto Ainv = inverse(A);
    if (!Ainv) throw std::logic_error("induced_quotient: complement is not complementary");
    Mat proj(M.ctx, k, M.dim);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < M.dim; ++j) proj.at(i, j) = Ainv->at(cs.cols() + i, j);

    Representation Q;
    Q.ctx = M.ctx;
    Q.dim = k;
    Q.E = proj * M.E * sec;
    Q.F = proj * M.F * sec;
    Q.K = proj * M.K * sec;
    Q.Kinv = proj * M.Kinv * sec;
    if (proj_out) *proj_out = proj;
    return Q;
}

Engine::Engine(const Algebra& alg, uint64_t seed, int coeff_bound, int retry_budget)
    : alg_(alg), seed_(seed), coeff_bound_(coeff_bound), retry_budget_(retry_budget) {
    const int n = alg.n();
    // P_{n-1} = V_2 (x) V_n; then walk down the ladder, splitting off the
    // known summand of V_2 (x) P_j.
    proj_.resize(n);  // index l-1 used for l = 1..n-1
    if (n < 3) return;
    Representation V2 = simple_V(alg, 2);
    Representation Vn = simple_V(alg, n);
    proj_[n - 2] = tensor(alg, V2, Vn);
    proj_[n - 2].label = IndecompLabel::proj(n - 1);
    {
        // V_2 (x) P_{n-1} = P_{n-2} (+) 2 V_n
        Representation M = tensor(alg, V2, proj_[n - 2]);
        for (int copies = 0; copies < 2; ++copies) {
            auto c = extract_summand(M, Vn);
            if (!c) throw UnverifiedError("projective ladder: failed to split V_n");
            M = *c;
        }
        proj_[n - 3] = M;
        proj_[n - 3].label = IndecompLabel::proj(n - 2);
    }
    for (int j = n - 2; j >= 2; --j) {
        // V_2 (x) P_j = P_{j+1} (+) P_{j-1}
        Representation M = tensor(alg, V2, proj_[j - 1]);
        auto c = extract_summand(M, proj_[j]);
        if (!c) throw UnverifiedError("projective ladder: failed to split P_" + std::to_string(j + 1));
        proj_[j - 2] = *c;
        proj_[j - 2].label = IndecompLabel::proj(j - 1);
    }
}

const Representation& Engine::projective(int l) const {
    if (l < 1 || l > alg_.n() - 1) throw std::invalid_argument("projective: l out of range");
    return proj_[l - 1];
}

HomSpace Engine::hom_space(const Representation& M, const Representation& N) const {
    const CycloContext& cy = alg_.cy();
    HomSpace H;
    if (M.dim == 0 || N.dim == 0) return H;

    auto wM = M.weights();
    auto wN = N.weights();
    bool graded = wM && wN;

    // Unknowns: entries T[r][c]; with diagonal K only weight-matched pairs
    // can be nonzero.
    std::vector<int> unk_of((size_t)N.dim * M.dim, -1);
    std::vector<std::pair<int, int>> unknowns;
    for (int r = 0; r < N.dim; ++r)
        for (int c = 0; c < M.dim; ++c) {
            if (graded && (*wN)[r] != (*wM)[c]) continue;
            unk_of[(size_t)r * M.dim + c] = (int)unknowns.size();
            unknowns.emplace_back(r, c);
        }
    int u = (int)unknowns.size();
    if (u == 0) return H;

    std::vector<const Mat*> actions = {&M.E, &N.E, &M.F, &N.F};
    std::vector<std::pair<const Mat*, const Mat*>> pairs = {{&M.E, &N.E}, {&M.F, &N.F}};
    if (!graded) pairs.push_back({&M.K, &N.K});

    std::vector<std::vector<CycloNum>> rows;
    for (auto [rhoM, rhoN] : pairs) {
        // Sparse adjacency of the two action matrices.
        std::vector<std::vector<std::pair<int, const CycloNum*>>> colM(M.dim), rowN(N.dim);
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < M.dim; ++c)
                if (!rhoM->at(r, c).is_zero()) colM[c].emplace_back(r, &rhoM->at(r, c));
        for (int r = 0; r < N.dim; ++r)
            for (int c = 0; c < N.dim; ++c)
                if (!rhoN->at(r, c).is_zero()) rowN[r].emplace_back(c, &rhoN->at(r, c));

        for (int i = 0; i < N.dim; ++i)
            for (int j = 0; j < M.dim; ++j) {
                // (T rhoM - rhoN T)[i][j] = 0
                std::vector<CycloNum> row(u, cy.zero());
                bool nonempty = false;
                for (auto& [c, val] : colM[j]) {
                    int k = unk_of[(size_t)i * M.dim + c];
                    if (k < 0) continue;
                    row[k] += *val;
                    nonempty = true;
                }
                for (auto& [r, val] : rowN[i]) {
                    int k = unk_of[(size_t)r * M.dim + j];
                    if (k < 0) continue;
                    row[k] -= *val;
                    nonempty = true;
                }
                if (nonempty) rows.push_back(std::move(row));
            }
    }

    Mat sys(&cy, (int)rows.size(), u);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < u; ++j) sys.at((int)i, j) = rows[i][j];
    Mat null = rows.empty() ? Mat::identity(&cy, u) : kernel_basis(sys);

    for (int b = 0; b < null.cols(); ++b) {
        Mat T(&cy, N.dim, M.dim);
        for (int k = 0; k < u; ++k)
            if (!null.at(k, b).is_zero()) T.at(unknowns[k].first, unknowns[k].second) = null.at(k, b);
        H.basis.push_back(std::move(T));
    }
    return H;
}

Mat Engine::random_combination(const std::vector<Mat>& basis, Prng& rng) const {
    const CycloContext& cy = alg_.cy();
    Mat T = Mat(&cy, basis[0].rows(), basis[0].cols());
    bool all_zero = true;
    for (const auto& B : basis) {
        long c = rng.range(-coeff_bound_, coeff_bound_);
        if (c == 0) continue;
        all_zero = false;
        T = T + B.scaled(cy.from_int(c));
    }
    if (all_zero && !basis.empty()) T = T + basis[0];
    return T;
}

bool Engine::intertwines(const Mat& T, const Representation& src, const Representation& dst) const {
    return T * src.E == dst.E * T && T * src.F == dst.F * T && T * src.K == dst.K * T;
}

IsoResult Engine::find_isomorphism(const Representation& M, const Representation& N) const {
    const CycloContext& cy = alg_.cy();
    IsoResult res;
    if (M.dim != N.dim) {
        res.status = IsoStatus::None;
        return res;
    }
    if (M.dim == 0) {
        res.status = IsoStatus::Found;
        res.witness = Mat(&cy, 0, 0);
        return res;
    }
    if (M.E == N.E && M.F == N.F && M.K == N.K) {
        res.status = IsoStatus::Found;
        res.witness = Mat::identity(&cy, M.dim);
        return res;
    }
    HomSpace H = hom_space(M, N);
    if (H.dim() == 0) {
        res.status = IsoStatus::None;
        return res;
    }
    if (H.dim() == 1) {
        if (auto inv = inverse(H.basis[0])) {
            res.status = IsoStatus::Found;
            res.witness = H.basis[0];
        } else {
            res.status = IsoStatus::None;
        }
        return res;
    }
    Prng rng(Prng::derive(seed_, "find_isomorphism"));
    for (int t = 0; t < retry_budget_; ++t) {
        Mat T = random_combination(H.basis, rng);
        if (inverse(T)) {
            res.status = IsoStatus::Found;
            res.witness = std::move(T);
            return res;
        }
    }
    if (H.dim() == 2) {
        // det(x T1 + T2) is a polynomial of degree <= dim; if it vanishes at
        // dim+1 points and det(T1) = 0, every combination is singular.
        bool all_singular = !inverse(H.basis[0]);
        for (int x = 0; all_singular && x <= M.dim; ++x) {
            Mat T = H.basis[0].scaled(cy.from_int(x)) + H.basis[1];
            if (inverse(T)) all_singular = false;
        }
        if (all_singular) {
            res.status = IsoStatus::None;
            return res;
        }
        // A combination was invertible after all; redo the cheap search.
        for (int x = 0; x <= M.dim; ++x) {
            Mat T = H.basis[0].scaled(cy.from_int(x)) + H.basis[1];
            if (inverse(T)) {
                res.status = IsoStatus::Found;
                res.witness = std::move(T);
                return res;
            }
        }
    }
    res.status = IsoStatus::Unverified;
    return res;
}

Representation Engine::construct(const IndecompLabel& lab) const {
    switch (lab.kind) {
        case IndecompLabel::Kind::Simple:
            return simple_V(alg_, lab.l);
        case IndecompLabel::Kind::BlockSimple:
            return block_simple_V(alg_, lab.t, lab.r);
        case IndecompLabel::Kind::Proj:
            return projective(lab.l);
        case IndecompLabel::Kind::Syzygy: {
            {
                std::lock_guard<std::mutex> lock(cache_mu_);
                auto it = syzygy_cache_.find(lab);
                if (it != syzygy_cache_.end()) return it->second;
            }
            Representation base = simple_V(alg_, lab.l);
            Representation s = syzygy(base, lab.sign, lab.s);
            s.label = lab;
            std::lock_guard<std::mutex> lock(cache_mu_);
            syzygy_cache_.emplace(lab, s);
            return s;
        }
        case IndecompLabel::Kind::Band:
            throw NotConstructible("band modules are symbolic-only: " + lab.to_string());
    }
    throw std::logic_error("unreachable");
}

Representation Engine::construct(const DecompClaim& claim) const {
    std::vector<Representation> parts;
    for (const auto& [lab, mult] : claim)
        for (int c = 0; c < mult; ++c) parts.push_back(construct(lab));
    return direct_sum(alg_, parts);
}

DecompClaim Engine::decompose_semisimple(const Representation& M) const {
    const CycloContext& cy = alg_.cy();
    const int n = alg_.n();
    const int m = alg_.m();
    auto bi = block_index(M);
    if (!bi || *bi == 0)
        throw std::invalid_argument("decompose_semisimple requires a single semisimple block");
    int t = n - *bi;
    auto w = M.weights();
    if (!w) throw std::invalid_argument("decompose_semisimple requires a diagonal K action");

    Mat ker = kernel_basis(M.F);
    DecompClaim claim;
    int inv2 = (n + 1) / 2;  // inverse of 2 mod n
    for (int c = 0; c < ker.cols(); ++c) {
        int weight = -1;
        for (int r = 0; r < M.dim; ++r)
            if (!ker.at(r, c).is_zero()) {
                if (weight < 0) weight = (*w)[r];
                else if (weight != (*w)[r])
                    throw std::logic_error("kernel vector mixes weights");
            }
        // weight = t + 2 r n (mod n^2)
        int diff = ((weight - t) % m + m) % m;
        if (diff % n != 0) throw std::logic_error("kernel weight outside the block lattice");
        int r = (int)(((long)(diff / n) * inv2) % n);
        claim[IndecompLabel::block_simple(t, r, n)]++;
    }
    if (total_dim(claim, n) != M.dim)
        throw std::logic_error("decompose_semisimple: dimensions do not reconcile");
    return claim;
}

ClaimResult Engine::verify_semisimple_claim(const Representation& M,
                                            const DecompClaim& claim) const {
    const CycloContext& cy = alg_.cy();
    const int n = alg_.n();
    ClaimResult res;
    DecompClaim counted = decompose_semisimple(M);
    if (counted != claim) {
        std::ostringstream os;
        os << "multiplicity mismatch: counted " << claim_to_string(counted) << " vs claimed "
           << claim_to_string(claim);
        res.status = IsoStatus::None;
        res.diagnostics = os.str();
        return res;
    }
    // Assemble the witness from E-orbits of ker F vectors, column-aligned
    // with the direct sum in claim order.
    auto w = M.weights();
    Mat ker = kernel_basis(M.F);
    std::map<IndecompLabel, std::vector<int>> by_label;
    int m = alg_.m();
    int inv2 = (n + 1) / 2;
    auto bi = block_index(M);
    int t = n - *bi;
    for (int c = 0; c < ker.cols(); ++c) {
        int weight = -1;
        for (int r = 0; r < M.dim; ++r)
            if (!ker.at(r, c).is_zero()) {
                weight = (*w)[r];
                break;
            }
        int diff = ((weight - t) % m + m) % m;
        int r = (int)(((long)(diff / n) * inv2) % n);
        by_label[IndecompLabel::block_simple(t, r, n)].push_back(c);
    }
    Mat T(&cy, M.dim, M.dim);
    int col = 0;
    for (const auto& [lab, mult] : claim) {
        auto& avail = by_label[lab];
        for (int copy = 0; copy < mult; ++copy) {
            int kcol = avail.back();
            avail.pop_back();
            std::vector<CycloNum> v(M.dim);
            for (int r = 0; r < M.dim; ++r) v[r] = ker.at(r, kcol);
            for (int i = 0; i < n; ++i) {
                for (int r = 0; r < M.dim; ++r) T.at(r, col) = v[r];
                ++col;
                if (i + 1 < n) v = M.E.apply(v);
            }
        }
    }
    Representation claimed = construct(claim);
    if (!intertwines(T, claimed, M) || !inverse(T)) {
        res.status = IsoStatus::Unverified;
        res.diagnostics = "orbit witness failed verification";
        return res;
    }
    res.status = IsoStatus::Found;
    res.witness = std::move(T);
    return res;
}

ClaimResult Engine::verify_claim(const Representation& M, const DecompClaim& claim) const {
    const int n = alg_.n();
    ClaimResult res;
    if (total_dim(claim, n) != M.dim) {
        std::ostringstream os;
        os << "dimension mismatch: module has dim " << M.dim << ", claim "
           << claim_to_string(claim) << " totals " << total_dim(claim, n);
        res.status = IsoStatus::None;
        res.diagnostics = os.str();
        return res;
    }
    if (M.dim == 0) {
        res.status = IsoStatus::Found;
        res.witness = Mat(&alg_.cy(), 0, 0);
        return res;
    }
    bool all_block_simple = std::all_of(claim.begin(), claim.end(), [](const auto& kv) {
        return kv.first.kind == IndecompLabel::Kind::BlockSimple;
    });
    auto bi = block_index(M);
    if (all_block_simple && bi && *bi >= 1 && M.weights()) return verify_semisimple_claim(M, claim);

    Representation claimed = construct(claim);
    IsoResult iso = find_isomorphism(claimed, M);
    res.status = iso.status;
    res.witness = iso.witness;
    if (iso.status != IsoStatus::Found) {
        // Hom-dimension probe table against the simples of the blocks involved.
        std::ostringstream os;
        os << "claim " << claim_to_string(claim) << " unverified; Hom probe (M vs claim):";
        std::set<int> blocks;
        if (bi) blocks.insert(*bi);
        for (const auto& [lab, mult] : claim)
            blocks.insert(lab.kind == IndecompLabel::Kind::BlockSimple ? n - lab.t : 0);
        for (int b : blocks)
            for (const auto& S : simples_of_block(b)) {
                int hm = (int)hom_space(M, S).dim();
                int hc = (int)hom_space(claimed, S).dim();
                if (hm != hc)
                    os << " [" << (S.label ? S.label->to_string() : "?") << ": " << hm
                       << " != " << hc << "]";
            }
        res.diagnostics = os.str();
    }
    return res;
}

std::vector<Representation> Engine::simples_of_block(int i) const {
    const int n = alg_.n();
    std::vector<Representation> out;
    if (i == 0) {
        for (int l = 1; l <= n; ++l) out.push_back(simple_V(alg_, l));
    } else {
        for (int r = 0; r < n; ++r) out.push_back(block_simple_V(alg_, n - i, r));
    }
    return out;
}

SubQuot Engine::radical(const Representation& M) const {
    const CycloContext& cy = alg_.cy();
    // Intersection of kernels of all homs to simples of the blocks present.
    std::set<int> blocks;
    auto w = M.weights();
    const int n = alg_.n();
    if (w) {
        for (int x : *w) blocks.insert(((n - (x % n)) % n + n) % n);
    } else {
        for (int b = 0; b < n; ++b) blocks.insert(b);
    }
    std::vector<Mat> homs;
    for (int b : blocks)
        for (const auto& S : simples_of_block(b))
            for (const auto& h : hom_space(M, S).basis) homs.push_back(h);
    if (homs.empty()) {
        SubQuot sq;
        sq.rep = M;
        sq.map = Mat::identity(&cy, M.dim);
        return sq;
    }
    int rows = 0;
    for (const auto& h : homs) rows += h.rows();
    Mat stack(&cy, rows, M.dim);
    int off = 0;
    for (const auto& h : homs) {
        for (int r = 0; r < h.rows(); ++r)
            for (int c = 0; c < M.dim; ++c) stack.at(off + r, c) = h.at(r, c);
        off += h.rows();
    }
    Mat incl = kernel_basis(stack);
    SubQuot sq;
    sq.map = incl;
    sq.rep = induced_sub(M, incl);
    return sq;
}

SubQuot Engine::socle(const Representation& M) const {
    const CycloContext& cy = alg_.cy();
    std::set<int> blocks;
    auto w = M.weights();
    const int n = alg_.n();
    if (w) {
        for (int x : *w) blocks.insert(((n - (x % n)) % n + n) % n);
    } else {
        for (int b = 0; b < n; ++b) blocks.insert(b);
    }
    std::vector<Mat> images;
    int total_cols = 0;
    for (int b : blocks)
        for (const auto& S : simples_of_block(b))
            for (const auto& h : hom_space(S, M).basis) {
                images.push_back(h);
                total_cols += h.cols();
            }
    Mat stack(&cy, M.dim, total_cols);
    int off = 0;
    for (const auto& h : images) {
        for (int r = 0; r < M.dim; ++r)
            for (int c = 0; c < h.cols(); ++c) stack.at(r, off + c) = h.at(r, c);
        off += h.cols();
    }
    Mat incl = column_space(stack);
    SubQuot sq;
    sq.map = incl;
    sq.rep = induced_sub(M, incl);
    return sq;
}

SubQuot Engine::top(const Representation& M) const {
    SubQuot rad = radical(M);
    SubQuot t;
    Mat proj;
    t.rep = induced_quotient(M, rad.map, &proj);
    t.map = proj;
    return t;
}

CoverResult Engine::projective_cover(const Representation& M) const {
    const CycloContext& cy = alg_.cy();
    const int n = alg_.n();
    auto bi = block_index(M);
    if (bi && *bi >= 1) {
        // Semisimple block: every module is projective.
        return {M, Mat::identity(&cy, M.dim)};
    }
    std::vector<Representation> parts;
    for (int l = 1; l <= n; ++l) {
        int mult = (int)hom_space(M, simple_V(alg_, l)).dim();
        const Representation& P = (l == n) ? simple_V(alg_, n) : projective(l);
        for (int c = 0; c < mult; ++c) parts.push_back(P);
    }
    Representation P = direct_sum(alg_, parts);
    HomSpace H = hom_space(P, M);
    Prng rng(Prng::derive(seed_, "projective_cover"));
    for (int t = 0; t < retry_budget_; ++t) {
        Mat pi = random_combination(H.basis, rng);
        if (rank(pi) == M.dim) return {std::move(P), std::move(pi)};
    }
    throw UnverifiedError("projective_cover: no surjection found within the retry budget");
}

Representation Engine::syzygy(const Representation& M, int sign, int s) const {
    const int n = alg_.n();
    Representation cur = M;
    for (int step = 0; step < s; ++step) {
        if (sign > 0) {
            CoverResult cover = projective_cover(cur);
            Mat incl = kernel_basis(cover.surjection);
            cur = induced_sub(cover.P, incl);
        } else {
            // Injective envelope = projective cover of the socle, by
            // self-injectivity.
            std::vector<Representation> parts;
            for (int l = 1; l <= n; ++l) {
                int mult = (int)hom_space(simple_V(alg_, l), cur).dim();
                const Representation& P = (l == n) ? simple_V(alg_, n) : projective(l);
                for (int c = 0; c < mult; ++c) parts.push_back(P);
            }
            Representation I = direct_sum(alg_, parts);
            HomSpace H = hom_space(cur, I);
            Prng rng(Prng::derive(seed_, "injective_envelope"));
            bool done = false;
            for (int t = 0; t < retry_budget_ && !done; ++t) {
                Mat iota = random_combination(H.basis, rng);
                if (rank(iota) == cur.dim) {
                    cur = induced_quotient(I, iota);
                    done = true;
                }
            }
            if (!done)
                throw UnverifiedError("syzygy: no embedding found within the retry budget");
        }
    }
    return cur;
}

std::optional<Representation> Engine::extract_summand(const Representation& M,
                                                      const Representation& X) const {
    if (X.dim == 0 || X.dim > M.dim) return std::nullopt;
    HomSpace in = hom_space(X, M);
    if (in.dim() == 0) return std::nullopt;
    HomSpace out = hom_space(M, X);
    if (out.dim() == 0) return std::nullopt;
    Prng rng(Prng::derive(seed_, "extract_summand"));
    for (int t = 0; t < retry_budget_; ++t) {
        Mat iota = random_combination(in.basis, rng);
        Mat pi = random_combination(out.basis, rng);
        if (!inverse(pi * iota)) continue;
        Mat incl = kernel_basis(pi);
        return induced_sub(M, incl);
    }
    return std::nullopt;
}

PeelResult Engine::peel_projectives(const Representation& M) const {
    const int n = alg_.n();
    PeelResult res;
    res.stable = M;
    bool progress = true;
    while (progress && res.stable.dim > 0) {
        progress = false;
        for (int l = n; l >= 1; --l) {
            const Representation& X = (l == n) ? simple_V(alg_, n) : projective(l);
            if (X.dim > res.stable.dim) continue;
            auto c = extract_summand(res.stable, X);
            if (c) {
                res.projectives[l == n ? IndecompLabel::simple(n) : IndecompLabel::proj(l)]++;
                res.stable = *c;
                progress = true;
                break;
            }
        }
    }
    return res;
}

std::vector<int> Engine::composition_multiplicities(const Representation& M) const {
    const int n = alg_.n();
    std::vector<int> mult(n + 1, 0);
    for (int l = 1; l <= n; ++l) {
        const Representation& P = (l == n) ? simple_V(alg_, n) : projective(l);
        mult[l] = (int)hom_space(P, M).dim();
    }
    return mult;
}

std::optional<DecompClaim> Engine::decompose(const Representation& M, int syzygy_cap) const {
    const int n = alg_.n();
    if (M.dim == 0) return DecompClaim{};
    auto w = M.weights();
    if (!w) return std::nullopt;

    // Split into block components (coordinate subspaces for diagonal K).
    DecompClaim out;
    std::map<int, std::vector<int>> block_coords;
    for (int i = 0; i < M.dim; ++i) {
        int b = ((n - ((*w)[i] % n)) % n + n) % n;
        block_coords[b].push_back(i);
    }
    for (auto& [b, coords] : block_coords) {
        Mat incl(M.ctx, M.dim, (int)coords.size());
        for (size_t c = 0; c < coords.size(); ++c) incl.at(coords[c], (int)c) = M.ctx->one();
        Representation part = (int)coords.size() == M.dim ? M : induced_sub(M, incl);
        if (b >= 1) {
            for (const auto& [lab, mult] : decompose_semisimple(part)) out[lab] += mult;
            continue;
        }
        PeelResult peel = peel_projectives(part);
        for (const auto& [lab, mult] : peel.projectives) out[lab] += mult;
        // Identify the stable part by splitting off simple/syzygy candidates.
        Representation st = peel.stable;
        while (st.dim > 0) {
            bool found = false;
            std::vector<IndecompLabel> candidates;
            for (int l = 1; l < n; ++l) candidates.push_back(IndecompLabel::simple(l));
            for (int s = 1; s <= syzygy_cap; ++s)
                for (int sign : {+1, -1})
                    for (int l = 1; l < n; ++l) candidates.push_back(IndecompLabel::syzygy(sign, s, l));
            for (const auto& lab : candidates) {
                if (lab.dim(n) > st.dim) continue;
                Representation X = construct(lab);
                if (st.dim == X.dim) {
                    IsoResult iso = find_isomorphism(X, st);
                    if (iso.status == IsoStatus::Found) {
                        out[lab]++;
                        st.dim = 0;
                        st.E = st.F = st.K = st.Kinv = Mat(M.ctx, 0, 0);
                        found = true;
                        break;
                    }
                    continue;
                }
                auto c = extract_summand(st, X);
                if (c) {
                    out[lab]++;
                    st = *c;
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
    }
    return out;
}

}  // namespace qqg
