#include "qqg/algebra.hpp"

#include <stdexcept>

namespace qqg {

void AlgebraElem::add_term(const PbwMono& m, const CycloNum& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& o) const {
    AlgebraElem r = *this;
    if (!r.alg_) r.alg_ = o.alg_;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& o) const { return *this + (-o); }

AlgebraElem AlgebraElem::operator-() const {
    AlgebraElem r(alg_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

AlgebraElem AlgebraElem::scaled(const CycloNum& s) const {
    AlgebraElem r(alg_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
}

bool AlgebraElem::operator==(const AlgebraElem& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = t_.begin();
    auto jt = o.t_.begin();
    for (; it != t_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

AlgebraElem AlgebraElem::operator*(const AlgebraElem& o) const {
    const Algebra* alg = alg_ ? alg_ : o.alg_;
    AlgebraElem r(alg);
    if (!alg) return r;
    const CycloContext& cy = alg->cy();
    const int n = alg->n();
    const int m = alg->m();
    for (const auto& [x, cx] : t_) {
        for (const auto& [y, cy_coeff] : o.t_) {
            // E^{x.a} F^{x.b} K^{x.c} E^{y.a} F^{y.b} K^{y.c}
            //   = q^{2 x.c (y.a - y.b)} E^{x.a} (F^{x.b} E^{y.a}) F^{y.b} K^{x.c+y.c}
            CycloNum scal = cx * cy_coeff * cy.q_power(2L * x.c * (y.a - y.b));
            const AlgebraElem& fe = alg->straighten_fe(x.b, y.a);
            for (const auto& [t, ct] : fe.terms()) {
                int a = x.a + t.a;
                int b = t.b + y.b;
                if (a >= n || b >= n) continue;
                int c = (t.c + x.c + y.c) % m;
                r.add_term({a, b, c}, scal * ct * cy.q_power(-2L * t.c * y.b));
            }
        }
    }
    return r;
}

std::string AlgebraElem::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        if (!s.empty()) s += "  +  ";
        s += "(" + c.to_string() + ")";
        if (m.a) s += "*E^" + std::to_string(m.a);
        if (m.b) s += "*F^" + std::to_string(m.b);
        if (m.c) s += "*K^" + std::to_string(m.c);
    }
    return s;
}

Algebra::Algebra(std::shared_ptr<const CycloContext> ctx) : ctx_(std::move(ctx)) {
    const int n = ctx_->n();
    const int m = ctx_->m();
    const CycloContext& cy = *ctx_;
    fe_table_.assign((size_t)n * n, AlgebraElem(this));

    auto idx = [n](int b, int a) { return (size_t)b * n + a; };
    for (int a = 0; a < n; ++a) fe_table_[idx(0, a)].add_term({a, 0, 0}, cy.one());
    for (int b = 1; b < n; ++b) fe_table_[idx(b, 0)].add_term({0, b, 0}, cy.one());

    // F E^a = E^a F + E^{a-1} (A_a K^{-1} + B_a K)
    CycloNum qmqi = cy.q_power(1) - cy.q_power(-1);
    for (int a = 1; a < n; ++a) {
        CycloNum A = (cy.one() - cy.q_power(-2L * a)) *
                     ((cy.one() - cy.q_power(-2)) * qmqi).inverse();
        CycloNum B = -(cy.one() - cy.q_power(2L * a)) *
                     ((cy.one() - cy.q_power(2)) * qmqi).inverse();
        AlgebraElem& fe1 = fe_table_[idx(1, a)];
        fe1.add_term({a, 1, 0}, cy.one());
        fe1.add_term({a - 1, 0, m - 1}, A);
        fe1.add_term({a - 1, 0, 1}, B);
    }
    // F^b E^a = F^{b-1} (F E^a), pushing F^{b-1} into each PBW term.
    for (int b = 2; b < n; ++b)
        for (int a = 1; a < n; ++a) {
            AlgebraElem& out = fe_table_[idx(b, a)];
            for (const auto& [t, ct] : fe_table_[idx(1, a)].terms()) {
                // F^{b-1} E^{t.a} F^{t.b} K^{t.c}
                for (const auto& [u, cu] : fe_table_[idx(b - 1, t.a)].terms()) {
                    int bb = u.b + t.b;
                    if (u.a >= n || bb >= n) continue;
                    out.add_term({u.a, bb, (u.c + t.c) % m},
                                 ct * cu * cy.q_power(-2L * u.c * t.b));
                }
            }
        }
}

AlgebraElem Algebra::monomial(int a, int b, int c, const CycloNum& coeff) const {
    AlgebraElem r(this);
    int mm = m();
    int cc = ((c % mm) + mm) % mm;
    if (a < n() && b < n()) r.add_term({a, b, cc}, coeff);
    return r;
}

AlgebraElem Algebra::gen_K(int power) const {
    return monomial(0, 0, power, ctx_->one());
}

AlgebraElem Algebra::block_idempotent(int i) const {
    if (i < 0 || i >= n()) throw std::invalid_argument("block idempotent index out of range");
    AlgebraElem r(this);
    Rat inv_n(1, n());
    for (int t = 0; t < n(); ++t)
        r.add_term({0, 0, t * n()}, ctx_->q_power((long)t * i).scaled(inv_n));
    return r;
}

AlgebraElem Algebra::weight_idempotent(int s) const {
    AlgebraElem r(this);
    Rat inv_m(1, m());
    for (int rr = 0; rr < m(); ++rr)
        r.add_term({0, 0, rr}, ctx_->root_power((long)s * rr).scaled(inv_m));
    return r;
}

AlgebraElem Algebra::sub_idempotent(int i, int j) const {
    if (i < 1 || i > n() - 1 || j < 1 || j > n())
        throw std::invalid_argument("sub idempotent index out of range");
    AlgebraElem u(this);
    Rat inv_n(1, n());
    long w = (long)(j - 1) * n() + i;
    for (int k = 0; k < n(); ++k)
        u.add_term({0, 0, k}, ctx_->root_power(w * k).scaled(inv_n));
    return u * block_idempotent(i);
}

CycloNum Algebra::a_coeff(int i, int j, int k, int s) const {
    if (!(1 <= s && s <= k && k <= n()))
        throw std::invalid_argument("a-coefficient index out of range");
    if (s == k) return ctx_->one();
    // a_{k1} for the needed ladder, then a_{ks} = a_{k-s+1,1} + ... + a_{k,1}.
    const CycloContext& cy = *ctx_;
    CycloNum denom = cy.q_power(1) - cy.q_power(-1);
    auto a_k1 = [&](int kk) {
        CycloNum v = (cy.q_power(2L * (kk - 1)) * cy.root_power((long)(1 - j) * n() - i) -
                      cy.q_power(2L * (1 - kk)) * cy.root_power((long)i - (long)(1 - j) * n())) *
                     denom.inverse();
        if (v.is_zero())
            throw std::logic_error("vanishing a-coefficient a_{k,1} at k=" + std::to_string(kk));
        return v;
    };
    CycloNum acc = cy.zero();
    for (int t = k - s + 1; t <= k; ++t) acc += a_k1(t);
    if (acc.is_zero())
        throw std::logic_error("vanishing a-coefficient a_{k,s}");
    return acc;
}

AlgebraElem Algebra::a_element(int i, int j, int k) const {
    if (i < 1 || i > n() - 1 || j < 1 || j > n() || k < 1 || k > n())
        throw std::invalid_argument("a-element index out of range");
    AlgebraElem sum(this);
    CycloNum prod = ctx_->one();
    for (int p = 0; p <= k - 1; ++p) {
        prod *= a_coeff(i, j, k, k - p);
        sum = sum + monomial(k - 1 - p, n() - 1 - p, 0, prod);
    }
    return sum * block_idempotent(i);
}

CycloNum Algebra::associator_scalar(int s, int t, int r) const {
    int mm = m();
    s = ((s % mm) + mm) % mm;
    t = ((t % mm) + mm) % mm;
    r = ((r % mm) + mm) % mm;
    return ctx_->q_power((long)r * ((s + t) / mm));
}

bool Algebra::cocycle_holds(int a, int b, int c, int d) const {
    int mm = m();
    CycloNum lhs = associator_scalar(b, c, d) * associator_scalar(a, (b + c) % mm, d) *
                   associator_scalar(a, b, c);
    CycloNum rhs = associator_scalar((a + b) % mm, c, d) * associator_scalar(a, b, (c + d) % mm);
    return lhs == rhs;
}

}  // namespace qqg
