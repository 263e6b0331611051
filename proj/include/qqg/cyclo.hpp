#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qqg/rational.hpp"

namespace qqg {

class CycloContext;

// Element of Q(zeta) where zeta is a fixed primitive m-th root of unity,
// m = n^2.  Stored as rational coefficients in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}, fully reduced mod the m-th cyclotomic
// polynomial, so equality is coefficient-wise.  An empty coefficient
// vector is the canonical in-memory form of zero; full_coeffs() restores
// the all-zero vector of length phi(m) for serialization.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(const CycloContext* ctx, std::vector<Rat> coeffs);

    const CycloContext* ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_rational() const;  // lies in Q (only the constant coefficient may be nonzero)
    Rat rational_part() const;

    const std::vector<Rat>& raw_coeffs() const { return c_; }
    std::vector<Rat> full_coeffs() const;

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    CycloNum inverse() const;  // throws std::domain_error on zero
    CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }
    CycloNum scaled(const Rat& r) const;
    CycloNum pow(long e) const;

    std::string to_string() const;  // display form in powers of zeta

private:
    void normalize();

    const CycloContext* ctx_ = nullptr;
    std::vector<Rat> c_;
};

// Arithmetic context for Q(zeta_{n^2}), n odd > 2.  Holds the cyclotomic
// polynomial, cached powers of zeta and q = zeta^n, and the straightening
// data shared by everything downstream.  Build once, share read-only.
class CycloContext {
public:
    explicit CycloContext(int n);

    int n() const { return n_; }
    int m() const { return m_; }            // n^2
    int degree() const { return degree_; }  // phi(n^2)

    // Monic integer-coefficient minimal polynomial of zeta, ascending powers.
    const std::vector<Int>& cyclotomic_polynomial() const { return phi_poly_; }

    CycloNum zero() const;
    CycloNum one() const;
    CycloNum from_rational(const Rat& r) const;
    CycloNum from_int(long v) const { return from_rational(Rat(v)); }

    const CycloNum& root_power(long k) const;  // zeta^{k mod m}
    const CycloNum& q_power(long k) const;     // q^{k mod n}, q = zeta^n

    // (k)_base = sum_{i<k} base^i; (0)_base = 0.
    CycloNum q_integer(long k, const CycloNum& base) const;

    // If x equals zeta^k for some k, return k in [0, m); otherwise -1.
    int root_power_index(const CycloNum& x) const;

    std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly) const;

private:
    int n_, m_, degree_;
    std::vector<Int> phi_poly_;
    std::vector<CycloNum> zeta_pow_;  // m entries
};

// Validates n (odd, > 2) and builds the context.
std::shared_ptr<const CycloContext> make_context(int n);

// Cyclotomic polynomial Phi_d over Z, ascending coefficients, computed by
// exact division of x^d - 1 by the product of Phi_e over proper divisors e.
std::vector<Int> cyclotomic_poly(int d);

}  // namespace qqg
