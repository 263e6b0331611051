#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qqg/prng.hpp"
#include "qqg/rep.hpp"

namespace qqg {

struct NotConstructible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a randomized search exhausts its retry budget.  Budget
// exhaustion is "unverified", never "non-isomorphic"; definitive negatives
// are only returned when forced (dimension mismatch, or exhaustive search
// at Hom dimension <= 2).
struct UnverifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomSpace {
    std::vector<Mat> basis;  // target.dim x source.dim intertwiners
    int dim() const { return (int)basis.size(); }
};

enum class IsoStatus { Found, None, Unverified };

struct IsoResult {
    IsoStatus status = IsoStatus::Unverified;
    Mat witness;  // claim/source -> target, invertible when Found
};

struct ClaimResult {
    IsoStatus status = IsoStatus::Unverified;
    Mat witness;
    std::string diagnostics;
};

struct SubQuot {
    Representation rep;
    Mat map;  // inclusion (ambient x sub) or projection (quot x ambient)
};

struct CoverResult {
    Representation P;
    Mat surjection;  // dim M x dim P
};

struct PeelResult {
    DecompClaim projectives;
    Representation stable;
};

// Homological engine over a fixed algebra.  Generic-combination searches
// (isomorphism witnesses, cover surjections, split pairs) draw seeded
// deterministic integer coefficients in [-coeff_bound, coeff_bound] with a
// retry budget.  The projective modules P_1..P_{n-1} are built once at
// construction via the tensor identities
//   V_2 (x) V_n = P_{n-1},  V_2 (x) P_{n-1} = P_{n-2} (+) 2 V_n,
//   V_2 (x) P_j = P_{j+1} (+) P_{j-1}
// and shared read-only afterwards.
class Engine {
public:
    Engine(const Algebra& alg, uint64_t seed, int coeff_bound = 8, int retry_budget = 64);
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const Algebra& algebra() const { return alg_; }

    HomSpace hom_space(const Representation& M, const Representation& N) const;

    IsoResult find_isomorphism(const Representation& M, const Representation& N) const;

    // Builds the direct sum of the claimed summands and searches for a
    // witness isomorphism.  Semisimple-block claims take a constructive
    // path: standard-basis orbits through ker F, verified exactly.
    ClaimResult verify_claim(const Representation& M, const DecompClaim& claim) const;

    SubQuot radical(const Representation& M) const;
    SubQuot socle(const Representation& M) const;
    SubQuot top(const Representation& M) const;

    // P_l for 1 <= l <= n-1 (cached), V_n for l = n.
    const Representation& projective(int l) const;

    CoverResult projective_cover(const Representation& M) const;

    Representation syzygy(const Representation& M, int sign, int s) const;

    PeelResult peel_projectives(const Representation& M) const;

    // Multiplicity of V(t,r) = dim(ker F cap eigenspace(K, zeta^t q^{2r})),
    // for a module in a semisimple block.
    DecompClaim decompose_semisimple(const Representation& M) const;

    // If X is a direct summand of M, returns the complementary summand.
    std::optional<Representation> extract_summand(const Representation& M,
                                                  const Representation& X) const;

    // Full decomposition for arbitrary valid modules: block split, then
    // semisimple counting or projective peeling plus identification of the
    // stable part against simple/syzygy candidates.
    std::optional<DecompClaim> decompose(const Representation& M, int syzygy_cap = 6) const;

    Representation construct(const IndecompLabel& lab) const;
    Representation construct(const DecompClaim& claim) const;

    // Composition multiplicities [M : V_l] = dim Hom(P(V_l), M), block 0.
    std::vector<int> composition_multiplicities(const Representation& M) const;

    std::vector<Representation> simples_of_block(int i) const;

private:
    Mat random_combination(const std::vector<Mat>& basis, Prng& rng) const;
    bool intertwines(const Mat& T, const Representation& src, const Representation& dst) const;
    ClaimResult verify_semisimple_claim(const Representation& M, const DecompClaim& claim) const;

    const Algebra& alg_;
    uint64_t seed_;
    int coeff_bound_;
    int retry_budget_;
    std::vector<Representation> proj_;  // P_1..P_{n-1}

    // Memo for constructed syzygy modules; construction is deterministic
    // (seeded), so concurrent fills agree.
    mutable std::mutex cache_mu_;
    mutable std::map<IndecompLabel, Representation> syzygy_cache_;
};

// Restriction of the action to an invariant subspace spanned by the
// columns of `incl` (full column rank).
Representation induced_sub(const Representation& M, const Mat& incl);

// Quotient of M by the invariant column space of `incl`; fills `proj_out`
// with the projection matrix when non-null.
Representation induced_quotient(const Representation& M, const Mat& incl, Mat* proj_out = nullptr);

}  // namespace qqg
