#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qqg/labels.hpp"
#include "qqg/rational.hpp"

namespace qqg {

// A class the paper's generator formulas do not cover (and no derived
// expression has been registered for).
struct NotExpressible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integer polynomial in y, ascending coefficients.
using YPoly = std::vector<Int>;

YPoly poly_mul(const YPoly& a, const YPoly& b);
YPoly poly_add(const YPoly& a, const YPoly& b);
YPoly poly_scale(const YPoly& a, const Int& c);

// Commutative monomial in the generators y, x_t, eps_t, z+, z-, w_{s,eta}.
// Band parameters eta are opaque ids into the ring's label alphabet; only
// equality of labels matters.
struct GreenMono {
    int y = 0;
    std::vector<std::pair<int, int>> x;    // (t, exponent), sorted by t
    std::vector<std::pair<int, int>> eps;  // (t, exponent), sorted by t
    int zp = 0, zm = 0;
    std::vector<std::pair<int, int>> w;  // multiset of (s, eta_id), sorted

    auto operator<=>(const GreenMono&) const = default;

    int xeps_degree() const;
    static GreenMono mul(const GreenMono& a, const GreenMono& b);
};

// Integer combination of monomials; normal forms are the Z-basis
//   y^j (j <= 2n-2), y^k x_t (k <= (n-1)/2), y^i eps_t (i <= (n-3)/2),
//   y^l z+^s, y^l z-^s, y^l w_{s,eta} (l <= n-2, s >= 1).
class GreenElem {
public:
    GreenElem() = default;

    const std::map<GreenMono, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const GreenMono& m, const Int& c);

    GreenElem operator+(const GreenElem& o) const;
    GreenElem operator-(const GreenElem& o) const;
    GreenElem operator-() const;
    GreenElem scaled(const Int& c) const;
    bool operator==(const GreenElem& o) const = default;

    // Raw product of monomials, no reduction.
    static GreenElem raw_mul(const GreenElem& a, const GreenElem& b);

private:
    std::map<GreenMono, Int> t_;
};

struct RelationCheck {
    std::string set_name;   // I, U, J, T, stable
    std::string relation;   // human-readable generator
    bool ok;                // residue vanished
    std::string residue;    // nonzero residue, printed
};

// The Green ring as a computable normal-form ring over Z.  Relations are
// oriented to strictly decrease the lexicographic order on (z-degree,
// w-degree, x/eps-degree, y-degree); the declared basis monomials are the
// normal forms, so the rewrite terminates, and confluence is exercised by
// the associativity checks in the verification suite.
class GreenRing {
public:
    explicit GreenRing(int n, std::vector<std::string> eta_labels = {"inf", "eta1", "eta2",
                                                                     "eta3", "eta4"});

    int n() const { return n_; }
    const std::vector<std::string>& eta_labels() const { return eta_; }
    int eta_id(const std::string& label) const;  // throws on unknown label

    GreenElem zero() const { return {}; }
    GreenElem one() const { return from_poly({Int(1)}); }
    GreenElem gen_y(int exp = 1) const;
    GreenElem gen_x(int t) const;
    GreenElem gen_eps(int t) const;
    GreenElem gen_zp(int s = 1) const;
    GreenElem gen_zm(int s = 1) const;
    GreenElem gen_w(int s, const std::string& eta) const;
    GreenElem from_poly(const YPoly& p) const;

    bool is_normal(const GreenMono& m) const;

    GreenElem reduce(const GreenElem& raw) const;
    GreenElem mul(const GreenElem& a, const GreenElem& b) const { return reduce(GreenElem::raw_mul(a, b)); }

    // Image in the stable quotient (projective classes killed), reduced in
    // the stable normal form basis y^j (j <= n-2), y^l z±^s, y^l w_{s,eta}.
    GreenElem stable_reduce(const GreenElem& raw) const;

    // Class of an indecomposable in the generator basis.  Simple, Proj and
    // BlockSimple come from closed formulas; Syzygy(+-1, 1, 1) are the
    // generators z+ and z-; Band(s, 1, eta) is w_{s,eta}.  Anything else is
    // only available if a derived class was registered.
    GreenElem from_label(const IndecompLabel& lab) const;
    bool label_expressible(const IndecompLabel& lab) const;

    // Engine-derived classes (e.g. higher syzygies of V_1); recorded as
    // derived, never used by check_presentations.  Not thread-safe: call
    // during warm-up only.
    void register_derived_class(const IndecompLabel& lab, GreenElem cls);
    bool has_derived_class(const IndecompLabel& lab) const;

    // Reduce every generator of every relation set; s-indexed families are
    // swept for 1 <= k,s,t <= s_max and all alphabet labels.
    std::vector<RelationCheck> check_presentations(int s_max) const;

    // Count of normal monomials in the named family, for rank checks:
    //   "y"      -> pure powers of y
    //   "proj"   -> pure y plus x/eps families (projective class ring)
    int normal_basis_count(const std::string& family) const;

    const YPoly& f(int i) const;  // f_1..f_4
    const YPoly& g(int i) const;  // g_1..g_4

    std::string to_string(const GreenElem& e) const;
    std::string mono_to_string(const GreenMono& m) const;

private:
    GreenElem rewrite_step(const GreenMono& m) const;
    GreenElem stable_rewrite_step(const GreenMono& m) const;
    bool is_stable_normal(const GreenMono& m) const;
    GreenElem times_poly(const GreenMono& m, const YPoly& p) const;

    int n_;
    std::vector<std::string> eta_;
    YPoly f1_, f2_, f3_, f4_, g1_, g2_, g3_, g4_;
    std::map<IndecompLabel, GreenElem> derived_;
};

}  // namespace qqg
