#include "qqg/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

namespace qqg {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = (int)num.size() - 1;
    int dd = (int)den.size() - 1;
    if (dd < 0 || den[dd] == 0) throw std::logic_error("exact_div: bad divisor");
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        if (!mpz_divisible_p(num[i].get_mpz_t(), den[dd].get_mpz_t()))
            throw std::logic_error("exact_div: not divisible");
        Int c = num[i] / den[dd];
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const Int& r : num)
        if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
    return quot;
}

std::vector<Int> poly_mul_z(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void strip_poly(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<Int> cyclotomic_poly(int d) {
    // x^d - 1
    std::vector<Int> num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    std::vector<Int> den{Int(1)};
    for (int e = 1; e < d; ++e)
        if (d % e == 0) den = poly_mul_z(den, cyclotomic_poly(e));
    return exact_div(std::move(num), den);
}

CycloContext::CycloContext(int n) : n_(n), m_(n * n) {
    phi_poly_ = cyclotomic_poly(m_);
    degree_ = (int)phi_poly_.size() - 1;

    // zeta^k for 0 <= k < m; powers at or above the degree reduce mod Phi.
    zeta_pow_.resize(m_);
    for (int k = 0; k < m_; ++k) {
        std::vector<Rat> p(k + 1, Rat(0));
        p[k] = 1;
        zeta_pow_[k] = CycloNum(this, reduce_mod_phi(std::move(p)));
    }
}

std::vector<Rat> CycloContext::reduce_mod_phi(std::vector<Rat> poly) const {
    for (int i = (int)poly.size() - 1; i >= degree_; --i) {
        if (poly[i] == 0) continue;
        Rat lead = poly[i];
        poly[i] = 0;
        // Phi is monic: x^deg = -(lower part of Phi).
        for (int j = 0; j < degree_; ++j)
            if (phi_poly_[j] != 0) poly[i - degree_ + j] -= lead * Rat(phi_poly_[j]);
    }
    poly.resize(std::min<size_t>(poly.size(), degree_));
    return poly;
}

CycloNum CycloContext::zero() const { return CycloNum(this, {}); }

CycloNum CycloContext::one() const { return from_rational(Rat(1)); }

CycloNum CycloContext::from_rational(const Rat& r) const {
    if (r == 0) return zero();
    return CycloNum(this, {r});
}

const CycloNum& CycloContext::root_power(long k) const {
    long r = k % m_;
    if (r < 0) r += m_;
    return zeta_pow_[r];
}

const CycloNum& CycloContext::q_power(long k) const {
    long r = k % n_;
    if (r < 0) r += n_;
    return zeta_pow_[(size_t)(r * n_) % m_];
}

CycloNum CycloContext::q_integer(long k, const CycloNum& base) const {
    CycloNum acc = zero();
    CycloNum p = one();
    for (long i = 0; i < k; ++i) {
        acc += p;
        p *= base;
    }
    return acc;
}

int CycloContext::root_power_index(const CycloNum& x) const {
    for (int k = 0; k < m_; ++k)
        if (x == zeta_pow_[k]) return k;
    return -1;
}

std::shared_ptr<const CycloContext> make_context(int n) {
    if (n <= 2 || n % 2 == 0)
        throw std::invalid_argument("context requires odd n > 2, got n=" + std::to_string(n));
    return std::make_shared<const CycloContext>(n);
}

CycloNum::CycloNum(const CycloContext* ctx, std::vector<Rat> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    if ((int)c_.size() > ctx_->degree())
        c_ = ctx_->reduce_mod_phi(std::move(c_));
    normalize();
}

void CycloNum::normalize() {
    strip_poly(c_);
}

bool CycloNum::is_zero() const { return c_.empty(); }

bool CycloNum::is_rational() const { return c_.size() <= 1; }

Rat CycloNum::rational_part() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

std::vector<Rat> CycloNum::full_coeffs() const {
    std::vector<Rat> r = c_;
    r.resize(ctx_ ? ctx_->degree() : r.size(), Rat(0));
    return r;
}

CycloNum CycloNum::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return CycloNum(ctx_, std::move(r));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    const CycloContext* ctx = ctx_ ? ctx_ : o.ctx_;
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return CycloNum(ctx, std::move(r));
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    const CycloContext* ctx = ctx_ ? ctx_ : o.ctx_;
    if (is_zero() || o.is_zero()) return CycloNum(ctx, {});
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycloNum(ctx, std::move(r));
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

CycloNum CycloNum::scaled(const Rat& r) const {
    if (r == 0) return CycloNum(ctx_, {});
    std::vector<Rat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * r;
    return CycloNum(ctx_, std::move(out));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
    if (is_rational()) return CycloNum(ctx_, {Rat(1) / c_[0]});

    // Extended Euclid in Q[x] for gcd(this, Phi) = 1: find u with u*this = 1 mod Phi.
    std::vector<Rat> r0(ctx_->cyclotomic_polynomial().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(ctx_->cyclotomic_polynomial()[i]);
    std::vector<Rat> r1 = c_;
    std::vector<Rat> u0{};        // coefficient of `this` in r0
    std::vector<Rat> u1{Rat(1)};  // coefficient of `this` in r1
    while (true) {
        strip_poly(r1);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: unexpected common factor");
        if (r1.size() == 1) break;
        // r0 = q*r1 + rem
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        for (int i = (int)rem.size() - 1; i >= (int)r1.size() - 1; --i) {
            if (rem[i] == 0) continue;
            Rat c = rem[i] / r1.back();
            q[i - (r1.size() - 1)] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[i - (r1.size() - 1) + j] -= c * r1[j];
        }
        strip_poly(rem);
        // u_new = u0 - q*u1
        size_t qu = (q.empty() || u1.empty()) ? 0 : q.size() + u1.size() - 1;
        std::vector<Rat> un(std::max(u0.size(), qu), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) un[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
        }
        strip_poly(un);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
    // r1 is a nonzero constant c: inverse = u1 / c.
    Rat c = r1[0];
    std::vector<Rat> inv(u1.size());
    for (size_t i = 0; i < u1.size(); ++i) inv[i] = u1[i] / c;
    return CycloNum(ctx_, std::move(inv));
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum acc = ctx_->one();
    CycloNum base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycloNum::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_to_string(c_[i]);
        if (i == 1) s += "*z";
        if (i > 1) s += "*z^" + std::to_string(i);
    }
    return s;
}

}  // namespace qqg
