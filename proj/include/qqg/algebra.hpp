#pragma once

#include <compare>
#include <map>
#include <memory>

#include "qqg/cyclo.hpp"

namespace qqg {

// PBW monomial E^a F^b K^c with 0 <= a,b < n and 0 <= c < n^2.
struct PbwMono {
    int a = 0, b = 0, c = 0;
    auto operator<=>(const PbwMono&) const = default;
};

class Algebra;

// Element of the algebra in PBW normal form: sparse coefficient map, no
// explicit zeros stored.
class AlgebraElem {
public:
    AlgebraElem() = default;
    explicit AlgebraElem(const Algebra* alg) : alg_(alg) {}

    const Algebra* algebra() const { return alg_; }
    const std::map<PbwMono, CycloNum>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const PbwMono& m, const CycloNum& c);

    AlgebraElem operator+(const AlgebraElem& o) const;
    AlgebraElem operator-(const AlgebraElem& o) const;
    AlgebraElem operator-() const;
    AlgebraElem operator*(const AlgebraElem& o) const;  // straightened product
    AlgebraElem scaled(const CycloNum& s) const;
    bool operator==(const AlgebraElem& o) const;
    bool operator!=(const AlgebraElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    const Algebra* alg_ = nullptr;
    std::map<PbwMono, CycloNum> t_;
};

// The small quasi-quantum group at c = d = n: dimension n^4, generators
// E, F, K with E^n = F^n = 0 and K^{n^2} = 1.  Multiplication straightens
// F past E with
//   F E^r = E^r F + E^{r-1}( (1-q^{-2r})/((1-q^{-2})(q-q^{-1})) K^{-1}
//                          - (1-q^{2r})/((1-q^2)(q-q^{-1})) K )
// and moves K past E, F by powers of q^2.  The F^b E^a table is built once
// at construction and shared read-only afterwards.
class Algebra {
public:
    explicit Algebra(std::shared_ptr<const CycloContext> ctx);
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const CycloContext& cy() const { return *ctx_; }
    std::shared_ptr<const CycloContext> ctx_ptr() const { return ctx_; }
    int n() const { return ctx_->n(); }
    int m() const { return ctx_->m(); }

    AlgebraElem zero() const { return AlgebraElem(this); }
    AlgebraElem one() const { return monomial(0, 0, 0, ctx_->one()); }
    AlgebraElem monomial(int a, int b, int c, const CycloNum& coeff) const;
    AlgebraElem gen_E() const { return monomial(1, 0, 0, ctx_->one()); }
    AlgebraElem gen_F() const { return monomial(0, 1, 0, ctx_->one()); }
    AlgebraElem gen_K(int power = 1) const;

    // F^b E^a in PBW form, 0 <= a,b < n.
    const AlgebraElem& straighten_fe(int b, int a) const { return fe_table_[(size_t)b * n() + a]; }

    // e_i = (1/n) sum_t q^{ti} K^{tn}; orthogonal central idempotents.
    AlgebraElem block_idempotent(int i) const;

    // 1_s = (1/m) sum_r zeta^{sr} K^r; projects onto the K-eigenvalue zeta^{-s}.
    AlgebraElem weight_idempotent(int s) const;

    // T^i_j = (1/n) sum_k zeta^{((j-1)n+i)k} K^k e_i, 1<=i<=n-1, 1<=j<=n.
    AlgebraElem sub_idempotent(int i, int j) const;

    // Coefficients a^{ij}_{ks}: a_{kk}=1, a_{k1} from the closed formula,
    // a_{ks} = a_{k1} + a_{k-1,s-1}.  Throws if a required entry vanishes.
    CycloNum a_coeff(int i, int j, int k, int s) const;

    // A^{ij}_k = sum_{p=0}^{k-1} (prod_{t=0}^{p} a_{k,k-t}) E^{k-1-p} F^{n-1-p} e_i.
    AlgebraElem a_element(int i, int j, int k) const;

    // Associator scalar phi(K^s, K^t, K^r) = q^{r [(s+t)/m]}, arguments mod m.
    CycloNum associator_scalar(int s, int t, int r) const;

    // Normalized 3-cocycle identity on Z_m at one quadruple.
    bool cocycle_holds(int a, int b, int c, int d) const;

private:
    std::shared_ptr<const CycloContext> ctx_;
    std::vector<AlgebraElem> fe_table_;
};

}  // namespace qqg
