#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qqg/algebra.hpp"
#include "qqg/labels.hpp"
#include "qqg/matrix.hpp"

namespace qqg {

// Finite-dimensional module: square matrices for the E, F, K actions (and
// K^{-1}, stored to avoid repeated inversion).  Immutable after
// construction; tensor and direct_sum are pure.
struct Representation {
    const CycloContext* ctx = nullptr;
    int dim = 0;
    Mat E, F, K, Kinv;
    std::optional<IndecompLabel> label;

    // K-eigenvalue exponents per basis vector (eigenvalue zeta^{w[i]}),
    // available whenever K is diagonal with root-of-unity entries.
    std::optional<std::vector<int>> weights() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every defining relation exactly: K K^{-1} = 1, K^{n^2} = 1,
// E^n = F^n = 0, K E K^{-1} = q^2 E, K F K^{-1} = q^{-2} F,
// [E,F] = (K - K^{-1})/(q - q^{-1}).
ValidationReport validate(const Representation& M);

// The l-dimensional simple module of the principal block, 1 <= l <= n.
Representation simple_V(const Algebra& alg, int l);

// The n-dimensional simple module V(t,r), 1 <= t <= n-1; r reduced mod n.
Representation block_simple_V(const Algebra& alg, int t, int r);

// H T^i_j by left multiplication on the basis E^s F^l T^i_j.
Representation regular_submodule(const Algebra& alg, int i, int j);

// Block-diagonal sum; the empty sum is the zero module.
Representation direct_sum(const Algebra& alg, const std::vector<Representation>& parts);

// Quasi-Hopf tensor product.  K acts diagonally as K (x) K; E and F use the
// coproduct
//   E -> E P_low (x) K^{-n} + E P_high (x) 1 + K (x) E
//   F -> F Q_low (x) K^{-1} + F Q_high (x) K^{n-1} + 1 (x) F
// where P/Q are the K-eigenprojections onto the weight-index windows
// [0, 2n-1], [2n, n^2-1], [0, n^2-2n-1], [n^2-2n, n^2-1] of the left factor.
Representation tensor(const Algebra& alg, const Representation& M, const Representation& N);

// Action of an algebra element as a matrix on M.
Mat act(const Algebra& alg, const AlgebraElem& x, const Representation& M);

// Block index i with K^n = q^{n-i} I; nullopt when K^n is not scalar.
std::optional<int> block_index(const Representation& M);

// Projection onto the K-eigenspace of eigenvalue zeta^{-s} (the action of
// the weight idempotent 1_s), computed from weights when available.
Mat weight_projection(const Representation& M, int s);

// Associator matrix for the triple (M,N,P): the diagonal action of
// sum phi(f,g,h) 1_f (x) 1_g (x) 1_h on M (x) N (x) P.
Mat associator_matrix(const Algebra& alg, const Representation& M, const Representation& N,
                      const Representation& P);

}  // namespace qqg
