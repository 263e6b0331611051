#include "qqg/greenring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qqg {

YPoly poly_mul(const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

YPoly poly_add(const YPoly& a, const YPoly& b) {
    YPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

YPoly poly_scale(const YPoly& a, const Int& c) {
    if (c == 0) return {};
    YPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

int GreenMono::xeps_degree() const {
    int d = 0;
    for (auto& [t, e] : x) d += e;
    for (auto& [t, e] : eps) d += e;
    return d;
}

GreenMono GreenMono::mul(const GreenMono& a, const GreenMono& b) {
    GreenMono r;
    r.y = a.y + b.y;
    r.zp = a.zp + b.zp;
    r.zm = a.zm + b.zm;
    auto merge_exps = [](const std::vector<std::pair<int, int>>& u,
                         const std::vector<std::pair<int, int>>& v) {
        std::map<int, int> acc;
        for (auto& [t, e] : u) acc[t] += e;
        for (auto& [t, e] : v) acc[t] += e;
        std::vector<std::pair<int, int>> out;
        for (auto& [t, e] : acc)
            if (e != 0) out.emplace_back(t, e);
        return out;
    };
    r.x = merge_exps(a.x, b.x);
    r.eps = merge_exps(a.eps, b.eps);
    r.w = a.w;
    r.w.insert(r.w.end(), b.w.begin(), b.w.end());
    std::sort(r.w.begin(), r.w.end());
    return r;
}

void GreenElem::add_term(const GreenMono& m, const Int& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

GreenElem GreenElem::operator+(const GreenElem& o) const {
    GreenElem r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

GreenElem GreenElem::operator-(const GreenElem& o) const { return *this + (-o); }

GreenElem GreenElem::operator-() const {
    GreenElem r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

GreenElem GreenElem::scaled(const Int& c) const {
    GreenElem r;
    if (c == 0) return r;
    for (const auto& [m, co] : t_) r.t_.emplace(m, co * c);
    return r;
}

GreenElem GreenElem::raw_mul(const GreenElem& a, const GreenElem& b) {
    GreenElem r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(GreenMono::mul(ma, mb), ca * cb);
    return r;
}

namespace {

// c(r,i) = r/(r-i) * binom(r-i, i); always an integer (Lucas-type).
Int lucas_coeff(long r, long i) {
    Int b = binomial((unsigned long)(r - i), (unsigned long)i) * Int(r);
    Int q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), Int(r - i).get_mpz_t());
    return q;
}

void poly_set(YPoly& p, int deg, Int c) {
    if ((int)p.size() <= deg) p.resize(deg + 1, Int(0));
    p[deg] += c;
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// y^deg - p for monic p of degree deg: the oriented remainder of the rule
// "p = 0", with strictly smaller y-degree.
YPoly poly_sub_monic(const YPoly& p, int deg) {
    if ((int)p.size() != deg + 1 || p.back() != 1)
        throw std::logic_error("poly_sub_monic: polynomial is not monic of the expected degree");
    YPoly r(p.size() - 1, Int(0));
    for (size_t i = 0; i + 1 < p.size(); ++i) r[i] = -p[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace

GreenRing::GreenRing(int n, std::vector<std::string> eta_labels)
    : n_(n), eta_(std::move(eta_labels)) {
    if (n <= 2 || n % 2 == 0) throw std::invalid_argument("Green ring requires odd n > 2");
    const int h = (n - 1) / 2;

    for (int i = 0; i <= h; ++i)
        poly_set(f1_, n - 1 - 2 * i, (i % 2 ? Int(-1) : Int(1)) * binomial(n - 1 - i, i));
    for (int i = 0; i <= h; ++i)
        poly_set(f2_, n - 2 * i, (i % 2 ? Int(-1) : Int(1)) * lucas_coeff(n, i));
    poly_set(f2_, 0, Int(-2));
    for (int i = 1; i <= h; ++i)
        poly_set(f3_, n - 1 - 2 * i, (i % 2 ? Int(1) : Int(-1)) * binomial(n - i - 2, i - 1));
    for (int i = 1; i <= h; ++i)
        poly_set(f4_, n - 2 * i, (i % 2 ? Int(1) : Int(-1)) * binomial(n - i - 1, i - 1));

    for (int i = 0; 2 * i <= (n + 1) / 2; ++i)
        poly_set(g1_, (n + 1) / 2 - 2 * i, (i % 2 ? Int(-1) : Int(1)) * lucas_coeff((n + 1) / 2, i));
    for (int i = 0; 2 * i <= (n - 1) / 2; ++i)
        poly_set(g2_, (n - 1) / 2 - 2 * i, (i % 2 ? Int(-1) : Int(1)) * lucas_coeff((n - 1) / 2, i));
    for (int i = 2; i <= h; ++i)
        poly_set(g3_, n - 2 * i, (i % 2 ? Int(-1) : Int(1)) * binomial(n - 2 - i, i - 2));
    poly_set(g3_, 2, Int(1));
    poly_set(g3_, 0, Int(-1));
    for (int k = 1; k <= h; ++k)
        for (int i = 0; 4 * i <= n - 1 - 2 * k; ++i)
            poly_set(g4_, k, (i % 2 ? Int(-1) : Int(1)) * lucas_coeff(k + 2 * i, i));
    {
        Int c0(1);
        for (int i = 1; 4 * i <= n - 1; ++i) c0 += (i % 2 ? Int(-2) : Int(2));
        poly_set(g4_, 0, c0);
    }
}

const YPoly& GreenRing::f(int i) const {
    switch (i) {
        case 1: return f1_;
        case 2: return f2_;
        case 3: return f3_;
        case 4: return f4_;
    }
    throw std::invalid_argument("f index");
}

const YPoly& GreenRing::g(int i) const {
    switch (i) {
        case 1: return g1_;
        case 2: return g2_;
        case 3: return g3_;
        case 4: return g4_;
    }
    throw std::invalid_argument("g index");
}

int GreenRing::eta_id(const std::string& label) const {
    for (size_t i = 0; i < eta_.size(); ++i)
        if (eta_[i] == label) return (int)i;
    throw std::invalid_argument("unknown band parameter label: '" + label + "'");
}

GreenElem GreenRing::gen_y(int exp) const {
    GreenMono m;
    m.y = exp;
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::gen_x(int t) const {
    if (t < 1 || t > n_ - 1) throw std::invalid_argument("x_t index out of range");
    GreenMono m;
    m.x = {{t, 1}};
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::gen_eps(int t) const {
    if (t < 1 || t > n_ - 1) throw std::invalid_argument("eps_t index out of range");
    GreenMono m;
    m.eps = {{t, 1}};
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::gen_zp(int s) const {
    GreenMono m;
    m.zp = s;
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::gen_zm(int s) const {
    GreenMono m;
    m.zm = s;
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::gen_w(int s, const std::string& eta) const {
    if (s < 1) throw std::invalid_argument("w_{s,eta} requires s >= 1");
    GreenMono m;
    m.w = {{s, eta_id(eta)}};
    GreenElem e;
    e.add_term(m, Int(1));
    return e;
}

GreenElem GreenRing::from_poly(const YPoly& p) const {
    GreenElem e;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        GreenMono m;
        m.y = (int)i;
        e.add_term(m, p[i]);
    }
    return e;
}

bool GreenRing::is_normal(const GreenMono& m) const {
    int xe = m.xeps_degree();
    int wdeg = (int)m.w.size();
    int zdeg = m.zp + m.zm;
    int families = (xe > 0) + (wdeg > 0) + (zdeg > 0);
    if (families >= 2) return false;
    if (m.zp > 0 && m.zm > 0) return false;
    if (xe >= 2 || wdeg >= 2) return false;
    if (xe == 1) {
        if (!m.x.empty()) return m.y <= (n_ - 1) / 2;
        return m.y <= (n_ - 3) / 2;
    }
    if (zdeg > 0 || wdeg == 1) return m.y <= n_ - 2;
    return m.y <= 2 * n_ - 2;
}

GreenElem GreenRing::times_poly(const GreenMono& m, const YPoly& p) const {
    GreenElem e;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        GreenMono mm = m;
        mm.y += (int)i;
        e.add_term(mm, p[i]);
    }
    return e;
}

// One oriented rewrite of a non-normal monomial; every produced term is
// strictly smaller in (z-degree, w-degree, x/eps-degree, y-degree).
GreenElem GreenRing::rewrite_step(const GreenMono& m) const {
    const YPoly one{Int(1)};
    // z+ z- = 1 + f1 (2y + 4 f3)
    if (m.zp >= 1 && m.zm >= 1) {
        GreenMono res = m;
        res.zp--;
        res.zm--;
        YPoly r = poly_add(one, poly_mul(f1_, poly_add(YPoly{Int(0), Int(2)}, poly_scale(f3_, 4))));
        return times_poly(res, r);
    }
    // pairs of w factors
    if (m.w.size() >= 2) {
        GreenMono res = m;
        // Prefer a same-label pair if one exists.
        int i1 = -1, i2 = -1;
        for (size_t a = 0; a < m.w.size() && i1 < 0; ++a)
            for (size_t b = a + 1; b < m.w.size(); ++b)
                if (m.w[a].second == m.w[b].second) {
                    i1 = (int)a;
                    i2 = (int)b;
                    break;
                }
        bool same = i1 >= 0;
        if (!same) {
            i1 = 0;
            i2 = 1;
        }
        auto [k, eta1] = m.w[i1];
        auto [s, eta2] = m.w[i2];
        res.w.erase(res.w.begin() + i2);
        res.w.erase(res.w.begin() + i1);
        if (!same) {
            // w_{k,eta} w_{s,alpha} = k s f1^2
            return times_poly(res, poly_scale(poly_mul(f1_, f1_), Int(k) * Int(s)));
        }
        // w_{k,eta} w_{s,eta} = w_{k,eta}(1 + f4) + (s-1) k f1^2, k <= s
        GreenMono keep = res;
        keep.w.push_back({k, eta1});
        std::sort(keep.w.begin(), keep.w.end());
        GreenElem out = times_poly(keep, poly_add(one, f4_));
        out = out + times_poly(res, poly_scale(poly_mul(f1_, f1_), Int(s - 1) * Int(k)));
        return out;
    }
    // z against w
    if ((m.zp >= 1 || m.zm >= 1) && !m.w.empty()) {
        GreenMono res = m;
        bool plus = m.zp >= 1;
        if (plus) res.zp--;
        else res.zm--;
        auto [k, eta1] = res.w[0];
        GreenMono dropped = res;
        dropped.w.erase(dropped.w.begin());
        // (z± - f4) w_{k,eta} = k f1^2  /  k f1 (y + f3)
        GreenElem out = times_poly(res, f4_);
        YPoly tail = plus ? poly_mul(f1_, f1_) : poly_mul(f1_, poly_add(YPoly{Int(0), Int(1)}, f3_));
        out = out + times_poly(dropped, poly_scale(tail, Int(k)));
        return out;
    }
    // w against x or eps: w_{s,eta} x_t = w_{s,eta} eps_t = s g4 eps_t
    if (!m.w.empty() && m.xeps_degree() >= 1) {
        GreenMono res = m;
        auto [s, eta1] = res.w[0];
        res.w.erase(res.w.begin());
        int t;
        if (!res.x.empty()) {
            t = res.x[0].first;
            if (--res.x[0].second == 0) res.x.erase(res.x.begin());
        } else {
            t = res.eps[0].first;
            if (--res.eps[0].second == 0) res.eps.erase(res.eps.begin());
        }
        GreenMono withe = res;
        // append eps_t
        bool merged = false;
        for (auto& [tt, e] : withe.eps)
            if (tt == t) {
                e++;
                merged = true;
            }
        if (!merged) {
            withe.eps.emplace_back(t, 1);
            std::sort(withe.eps.begin(), withe.eps.end());
        }
        return times_poly(withe, poly_scale(g4_, Int(s)));
    }
    // z against x or eps: z± u = (2 g4 - 1) u
    if ((m.zp >= 1 || m.zm >= 1) && m.xeps_degree() >= 1) {
        GreenMono res = m;
        if (res.zp >= 1) res.zp--;
        else res.zm--;
        return times_poly(res, poly_add(poly_scale(g4_, Int(2)), YPoly{Int(-1)}));
    }
    // products of two x/eps factors
    if (m.xeps_degree() >= 2) {
        GreenMono res = m;
        // take two factors, tracking their kind
        int t1, t2;
        bool eps1, eps2;
        auto take = [&]() -> std::pair<int, bool> {
            if (!res.x.empty()) {
                int t = res.x[0].first;
                if (--res.x[0].second == 0) res.x.erase(res.x.begin());
                return {t, false};
            }
            int t = res.eps[0].first;
            if (--res.eps[0].second == 0) res.eps.erase(res.eps.begin());
            return {t, true};
        };
        std::tie(t1, eps1) = take();
        std::tie(t2, eps2) = take();
        if (t1 + t2 == n_) {
            // x x or x eps -> (f4+1) f1 ; eps eps -> g3 f1
            YPoly r = (eps1 && eps2) ? poly_mul(g3_, f1_) : poly_mul(poly_add(f4_, one), f1_);
            return times_poly(res, r);
        }
        int tsum = t1 + t2 < n_ ? t1 + t2 : t1 + t2 - n_;
        GreenMono withx = res;
        bool merged = false;
        for (auto& [tt, e] : withx.x)
            if (tt == tsum) {
                e++;
                merged = true;
            }
        if (!merged) {
            withx.x.emplace_back(tsum, 1);
            std::sort(withx.x.begin(), withx.x.end());
        }
        return times_poly(withx, g4_);
    }
    // Single-family y-degree overflow.
    if (m.xeps_degree() == 1) {
        if (!m.x.empty() && m.y >= (n_ + 1) / 2) {
            // (g1 - g2) x_t = 0, g1 - g2 monic of degree (n+1)/2
            GreenMono res = m;
            res.y -= (n_ + 1) / 2;
            YPoly rest = poly_sub_monic(poly_add(g1_, poly_scale(g2_, Int(-1))), (n_ + 1) / 2);
            return times_poly(res, rest);
        }
        if (!m.eps.empty() && m.y >= (n_ - 1) / 2) {
            // g4 (x_t - eps_t) = 0: y^{(n-1)/2} eps = y^{(n-1)/2} x + h x - h eps
            GreenMono res = m;
            res.y -= (n_ - 1) / 2;
            int t = res.eps[0].first;
            res.eps.clear();
            GreenMono asx = res;
            asx.x = {{t, 1}};
            GreenMono aseps = res;
            aseps.eps = {{t, 1}};
            YPoly h = g4_;  // h = g4 - y^{(n-1)/2}, degree < (n-1)/2
            h[(n_ - 1) / 2] -= 1;
            while (!h.empty() && h.back() == 0) h.pop_back();
            GreenElem out;
            GreenMono top = asx;
            top.y += (n_ - 1) / 2;
            out.add_term(top, Int(1));
            out = out + times_poly(asx, h) - times_poly(aseps, h);
            return out;
        }
    }
    if ((m.zp >= 1 || m.zm >= 1) && m.y >= n_ - 1) {
        // f1 z±^s = f1 (1 + 2 f4) z±^{s-1}
        GreenMono res = m;
        res.y -= n_ - 1;
        YPoly rest = poly_sub_monic(f1_, n_ - 1);  // y^{n-1} - f1
        GreenMono lower = res;
        if (lower.zp >= 1) lower.zp--;
        else lower.zm--;
        GreenElem out = times_poly(res, rest);
        out = out + times_poly(lower, poly_mul(f1_, poly_add(one, poly_scale(f4_, Int(2)))));
        return out;
    }
    if (!m.w.empty() && m.y >= n_ - 1) {
        // f1 w_{s,eta} = s f1 (1 + f4)
        GreenMono res = m;
        res.y -= n_ - 1;
        YPoly rest = poly_sub_monic(f1_, n_ - 1);
        auto [s, eta1] = res.w[0];
        GreenMono dropped = res;
        dropped.w.clear();
        GreenElem out = times_poly(res, rest);
        out = out + times_poly(dropped, poly_scale(poly_mul(f1_, poly_add(one, f4_)), Int(s)));
        return out;
    }
    if (m.y >= 2 * n_ - 1) {
        // f1 f2 = 0, monic of degree 2n-1
        GreenMono res = m;
        res.y -= 2 * n_ - 1;
        YPoly rest = poly_sub_monic(poly_mul(f1_, f2_), 2 * n_ - 1);
        return times_poly(res, rest);
    }
    throw std::logic_error("rewrite_step called on a normal monomial");
}

GreenElem GreenRing::reduce(const GreenElem& raw) const {
    GreenElem out;
    std::vector<std::pair<GreenMono, Int>> work(raw.terms().begin(), raw.terms().end());
    size_t steps = 0;
    const size_t budget = 4000000;
    while (!work.empty()) {
        auto [mo, co] = work.back();
        work.pop_back();
        if (co == 0) continue;
        if (is_normal(mo)) {
            out.add_term(mo, co);
            continue;
        }
        if (++steps > budget)
            throw std::runtime_error("reduce: step budget exhausted (non-termination guard)");
        GreenElem repl = rewrite_step(mo);
        for (const auto& [m2, c2] : repl.terms()) work.emplace_back(m2, c2 * co);
    }
    return out;
}

bool GreenRing::is_stable_normal(const GreenMono& m) const {
    if (m.xeps_degree() > 0) return false;  // projective classes vanish
    if (m.zp > 0 && m.zm > 0) return false;
    if (m.w.size() >= 2) return false;
    if (!m.w.empty() && (m.zp > 0 || m.zm > 0)) return false;
    return m.y <= n_ - 2;
}

GreenElem GreenRing::stable_rewrite_step(const GreenMono& m) const {
    const YPoly one{Int(1)};
    if (m.xeps_degree() > 0) return {};  // x_t, eps_t |-> 0
    if (m.zp >= 1 && m.zm >= 1) {
        GreenMono res = m;
        res.zp--;
        res.zm--;
        GreenElem out;
        out.add_term(res, Int(1));  // z+ z- = 1
        return out;
    }
    if (m.w.size() >= 2) {
        GreenMono res = m;
        int i1 = -1, i2 = -1;
        for (size_t a = 0; a < m.w.size() && i1 < 0; ++a)
            for (size_t b = a + 1; b < m.w.size(); ++b)
                if (m.w[a].second == m.w[b].second) {
                    i1 = (int)a;
                    i2 = (int)b;
                    break;
                }
        bool same = i1 >= 0;
        if (!same) {
            i1 = 0;
            i2 = 1;
        }
        auto [k, eta1] = m.w[i1];
        res.w.erase(res.w.begin() + i2);
        res.w.erase(res.w.begin() + i1);
        if (!same) return {};  // w_{k,eta} w_{s,alpha} = 0
        GreenMono keep = res;
        keep.w.push_back({k, eta1});
        std::sort(keep.w.begin(), keep.w.end());
        return times_poly(keep, poly_add(one, f4_));  // w_{k} w_{t} = w_{k}(1 + f4)
    }
    if ((m.zp >= 1 || m.zm >= 1) && !m.w.empty()) {
        GreenMono res = m;
        if (res.zp >= 1) res.zp--;
        else res.zm--;
        return times_poly(res, f4_);  // (z± - f4) w = 0
    }
    if (m.y >= n_ - 1) {
        GreenMono res = m;
        res.y -= n_ - 1;
        return times_poly(res, poly_sub_monic(f1_, n_ - 1));  // f1 = 0
    }
    throw std::logic_error("stable_rewrite_step called on a stable-normal monomial");
}

GreenElem GreenRing::stable_reduce(const GreenElem& raw) const {
    GreenElem out;
    std::vector<std::pair<GreenMono, Int>> work(raw.terms().begin(), raw.terms().end());
    size_t steps = 0;
    const size_t budget = 4000000;
    while (!work.empty()) {
        auto [mo, co] = work.back();
        work.pop_back();
        if (co == 0) continue;
        if (is_stable_normal(mo)) {
            out.add_term(mo, co);
            continue;
        }
        if (++steps > budget)
            throw std::runtime_error("stable_reduce: step budget exhausted");
        GreenElem repl = stable_rewrite_step(mo);
        for (const auto& [m2, c2] : repl.terms()) work.emplace_back(m2, c2 * co);
    }
    return out;
}

bool GreenRing::label_expressible(const IndecompLabel& lab) const {
    switch (lab.kind) {
        case IndecompLabel::Kind::Simple:
        case IndecompLabel::Kind::Proj:
        case IndecompLabel::Kind::BlockSimple:
            return true;
        case IndecompLabel::Kind::Syzygy:
            if (lab.l == 1 && lab.s == 1) return true;
            return derived_.count(lab) > 0;
        case IndecompLabel::Kind::Band:
            return lab.l == 1;
    }
    return false;
}

GreenElem GreenRing::from_label(const IndecompLabel& lab) const {
    switch (lab.kind) {
        case IndecompLabel::Kind::Simple: {
            // [V_l] = sum (-1)^i binom(l-1-i, i) y^{l-1-2i}
            YPoly p;
            for (int i = 0; 2 * i <= lab.l - 1; ++i)
                poly_set(p, lab.l - 1 - 2 * i,
                         (i % 2 ? Int(-1) : Int(1)) * binomial(lab.l - 1 - i, i));
            return reduce(from_poly(p));
        }
        case IndecompLabel::Kind::Proj: {
            // [P_l] = (sum (-1)^i (n-l)/(n-l-i) binom(n-l-i, i) y^{n-l-2i}) [V_n]
            YPoly p;
            for (int i = 0; 2 * i <= n_ - lab.l; ++i)
                poly_set(p, n_ - lab.l - 2 * i,
                         (i % 2 ? Int(-1) : Int(1)) * lucas_coeff(n_ - lab.l, i));
            return reduce(from_poly(poly_mul(p, f1_)));
        }
        case IndecompLabel::Kind::BlockSimple: {
            if (lab.r == 0) return gen_x(lab.t);
            if (lab.r == 1) return gen_eps(lab.t);
            // [V(t,r)] = sum (-1)^i binom(r-1-i,i) (y^2-2)^{r-1-2i} eps_t
            //          - sum (-1)^i binom(r-2-i,i) (y^2-2)^{r-2-2i} x_t
            YPoly y2m2{Int(-2), Int(0), Int(1)};
            auto chebyshev_like = [&](int deg) {
                YPoly acc;
                for (int i = 0; 2 * i <= deg; ++i) {
                    YPoly pw{Int(1)};
                    for (int k = 0; k < deg - 2 * i; ++k) pw = poly_mul(pw, y2m2);
                    acc = poly_add(acc, poly_scale(pw, (i % 2 ? Int(-1) : Int(1)) *
                                                           binomial(deg - i, i)));
                }
                return acc;
            };
            GreenElem e = GreenElem::raw_mul(from_poly(chebyshev_like(lab.r - 1)), gen_eps(lab.t)) -
                          GreenElem::raw_mul(from_poly(chebyshev_like(lab.r - 2)), gen_x(lab.t));
            return reduce(e);
        }
        case IndecompLabel::Kind::Syzygy: {
            if (lab.l == 1 && lab.s == 1) return lab.sign > 0 ? gen_zp(1) : gen_zm(1);
            auto it = derived_.find(lab);
            if (it != derived_.end()) return it->second;
            throw NotExpressible("class of " + lab.to_string() +
                                 " is not expressible from the generator formulas");
        }
        case IndecompLabel::Kind::Band: {
            if (lab.l == 1) return gen_w(lab.s, lab.eta);
            throw NotExpressible("class of " + lab.to_string() +
                                 " is not expressible from the generator formulas");
        }
    }
    throw std::logic_error("unreachable");
}

void GreenRing::register_derived_class(const IndecompLabel& lab, GreenElem cls) {
    derived_[lab] = std::move(cls);
}

bool GreenRing::has_derived_class(const IndecompLabel& lab) const {
    return derived_.count(lab) > 0;
}

std::vector<RelationCheck> GreenRing::check_presentations(int s_max) const {
    std::vector<RelationCheck> out;
    const YPoly onep{Int(1)};
    auto push = [&](const std::string& set, const std::string& rel, const GreenElem& residue,
                    bool stable = false) {
        GreenElem red = stable ? stable_reduce(residue) : reduce(residue);
        out.push_back({set, rel, red.is_zero(), red.is_zero() ? "" : to_string(red)});
    };

    // --- r_p(Ubar): single relation f1 f2.
    push("I", "f1*f2", from_poly(poly_mul(f1_, f2_)));

    // --- r(Ubar): the U set.
    auto raw = GreenElem::raw_mul;
    GreenElem zpzm = raw(gen_zp(1), gen_zm(1));
    GreenElem u2 = zpzm - one() -
                   from_poly(poly_mul(f1_, poly_add(YPoly{Int(0), Int(2)}, poly_scale(f3_, 4))));
    push("U", "z+*z- - 1 - f1*(2y+4f3)", u2);
    push("U", "f1*(z+ - 1 - 2f4)",
         raw(from_poly(f1_), gen_zp(1) - one() - from_poly(poly_scale(f4_, Int(2)))));
    push("U", "f1*(z+ - z-)", raw(from_poly(f1_), gen_zp(1) - gen_zm(1)));
    for (int k = 1; k <= s_max; ++k)
        for (const auto& eta : eta_) {
            GreenElem w = gen_w(k, eta);
            push("U", "f1*(w_{" + std::to_string(k) + "," + eta + "} - k - k*f4)",
                 raw(from_poly(f1_),
                     w - from_poly(poly_scale(poly_add(onep, f4_), Int(k)))));
            push("U", "(z+ - f4)*w_{" + std::to_string(k) + "," + eta + "} - k*f1^2",
                 raw(gen_zp(1) - from_poly(f4_), w) -
                     from_poly(poly_scale(poly_mul(f1_, f1_), Int(k))));
            push("U", "(z- - f4)*w_{" + std::to_string(k) + "," + eta + "} - k*f1*(y+f3)",
                 raw(gen_zm(1) - from_poly(f4_), w) -
                     from_poly(poly_scale(
                         poly_mul(f1_, poly_add(YPoly{Int(0), Int(1)}, f3_)), Int(k))));
        }
    for (int k = 1; k <= s_max; ++k)
        for (int s = 1; s <= s_max; ++s)
            for (const auto& eta : eta_)
                for (const auto& alpha : eta_) {
                    if (eta == alpha) continue;
                    push("U",
                         "w_{" + std::to_string(k) + "," + eta + "}*w_{" + std::to_string(s) +
                             "," + alpha + "} - k*s*f1^2",
                         raw(gen_w(k, eta), gen_w(s, alpha)) -
                             from_poly(poly_scale(poly_mul(f1_, f1_), Int(k) * Int(s))));
                }
    for (int k = 1; k <= s_max; ++k)
        for (int t = k; t <= s_max; ++t)
            for (const auto& eta : eta_)
                push("U",
                     "w_{" + std::to_string(k) + "," + eta + "}*(w_{" + std::to_string(t) + "," +
                         eta + "} - 1 - f4) - (t-1)*k*f1^2",
                     raw(gen_w(k, eta), gen_w(t, eta) - one() - from_poly(f4_)) -
                         from_poly(poly_scale(poly_mul(f1_, f1_), Int(t - 1) * Int(k))));

    // --- r_p(Utilde): the J set.
    push("J", "f1*f2", from_poly(poly_mul(f1_, f2_)));
    for (int t = 1; t <= n_ - 1; ++t) {
        push("J", "(g1-g2)*x_" + std::to_string(t),
             raw(from_poly(poly_add(g1_, poly_scale(g2_, Int(-1)))), gen_x(t)));
        push("J", "g4*(x_" + std::to_string(t) + " - eps_" + std::to_string(t) + ")",
             raw(from_poly(g4_), gen_x(t) - gen_eps(t)));
    }
    for (int t = 1; t <= n_ - 1; ++t)
        for (int t2 = 1; t2 <= n_ - 1; ++t2) {
            std::string st = std::to_string(t), st2 = std::to_string(t2);
            push("J", "x_" + st + "*x_" + st2 + " - x_" + st + "*eps_" + st2,
                 raw(gen_x(t), gen_x(t2)) - raw(gen_x(t), gen_eps(t2)));
            if (t + t2 != n_)
                push("J", "x_" + st + "*x_" + st2 + " - eps_" + st + "*eps_" + st2,
                     raw(gen_x(t), gen_x(t2)) - raw(gen_eps(t), gen_eps(t2)));
            if (t + t2 < n_)
                push("J", "x_" + st + "*x_" + st2 + " - g4*x_" + std::to_string(t + t2),
                     raw(gen_x(t), gen_x(t2)) - raw(from_poly(g4_), gen_x(t + t2)));
            if (t + t2 > n_)
                push("J", "x_" + st + "*x_" + st2 + " - g4*x_" + std::to_string(t + t2 - n_),
                     raw(gen_x(t), gen_x(t2)) - raw(from_poly(g4_), gen_x(t + t2 - n_)));
            if (t + t2 == n_) {
                push("J", "x_" + st + "*x_" + st2 + " - (f4+1)*f1",
                     raw(gen_x(t), gen_x(t2)) - from_poly(poly_mul(poly_add(f4_, onep), f1_)));
                push("J", "eps_" + st + "*eps_" + st2 + " - g3*f1",
                     raw(gen_eps(t), gen_eps(t2)) - from_poly(poly_mul(g3_, f1_)));
            }
        }

    // --- r(Utilde): T = I ∪ U ∪ U0; only the U0 part is new.
    for (int t = 1; t <= n_ - 1; ++t) {
        std::string st = std::to_string(t);
        push("T", "(z+ - z-)*x_" + st, raw(gen_zp(1) - gen_zm(1), gen_x(t)));
        push("T", "(z+ - z-)*eps_" + st, raw(gen_zp(1) - gen_zm(1), gen_eps(t)));
        push("T", "z+*x_" + st + " - (2g4-1)*x_" + st,
             raw(gen_zp(1), gen_x(t)) -
                 raw(from_poly(poly_add(poly_scale(g4_, Int(2)), YPoly{Int(-1)})), gen_x(t)));
        push("T", "z+*eps_" + st + " - (2g4-1)*eps_" + st,
             raw(gen_zp(1), gen_eps(t)) -
                 raw(from_poly(poly_add(poly_scale(g4_, Int(2)), YPoly{Int(-1)})), gen_eps(t)));
        for (int s = 1; s <= s_max; ++s)
            for (const auto& eta : eta_) {
                std::string ws = "w_{" + std::to_string(s) + "," + eta + "}";
                push("T", ws + "*x_" + st + " - " + ws + "*eps_" + st,
                     raw(gen_w(s, eta), gen_x(t)) - raw(gen_w(s, eta), gen_eps(t)));
                push("T", ws + "*x_" + st + " - s*g4*eps_" + st,
                     raw(gen_w(s, eta), gen_x(t)) -
                         raw(from_poly(poly_scale(g4_, Int(s))), gen_eps(t)));
            }
    }

    // --- stable ring: the Y' set, reduced in the stable quotient.
    push("stable", "f1", from_poly(f1_), true);
    push("stable", "z+*z- - 1", raw(gen_zp(1), gen_zm(1)) - one(), true);
    for (int k = 1; k <= s_max; ++k)
        for (const auto& eta : eta_) {
            push("stable", "(z+ - f4)*w_{" + std::to_string(k) + "," + eta + "}",
                 raw(gen_zp(1) - from_poly(f4_), gen_w(k, eta)), true);
            push("stable", "(z+ - z-)*w_{" + std::to_string(k) + "," + eta + "}",
                 raw(gen_zp(1) - gen_zm(1), gen_w(k, eta)), true);
        }
    for (int k = 1; k <= s_max; ++k)
        for (int s = 1; s <= s_max; ++s)
            for (const auto& eta : eta_)
                for (const auto& alpha : eta_) {
                    if (eta == alpha) continue;
                    push("stable",
                         "w_{" + std::to_string(k) + "," + eta + "}*w_{" + std::to_string(s) +
                             "," + alpha + "}",
                         raw(gen_w(k, eta), gen_w(s, alpha)), true);
                }
    for (int k = 1; k <= s_max; ++k)
        for (int t = k; t <= s_max; ++t)
            for (const auto& eta : eta_)
                push("stable",
                     "w_{" + std::to_string(k) + "," + eta + "}*(w_{" + std::to_string(t) + "," +
                         eta + "} - 1 - f4)",
                     raw(gen_w(k, eta), gen_w(t, eta) - one() - from_poly(f4_)), true);

    return out;
}

int GreenRing::normal_basis_count(const std::string& family) const {
    if (family == "y") return 2 * n_ - 1;
    if (family == "proj") {
        // Count by enumeration against the normality predicate.
        int count = 0;
        for (int j = 0; j <= 2 * n_ - 1 + 2; ++j) {
            GreenMono m;
            m.y = j;
            if (is_normal(m)) ++count;
        }
        for (int t = 1; t <= n_ - 1; ++t)
            for (int j = 0; j <= n_; ++j) {
                GreenMono mx;
                mx.y = j;
                mx.x = {{t, 1}};
                if (is_normal(mx)) ++count;
                GreenMono me;
                me.y = j;
                me.eps = {{t, 1}};
                if (is_normal(me)) ++count;
            }
        return count;
    }
    throw std::invalid_argument("unknown basis family: " + family);
}

std::string GreenRing::mono_to_string(const GreenMono& m) const {
    std::vector<std::string> parts;
    if (m.y == 1) parts.push_back("y");
    else if (m.y > 1) parts.push_back("y^" + std::to_string(m.y));
    for (auto& [t, e] : m.x)
        parts.push_back("x" + std::to_string(t) + (e > 1 ? "^" + std::to_string(e) : ""));
    for (auto& [t, e] : m.eps)
        parts.push_back("e" + std::to_string(t) + (e > 1 ? "^" + std::to_string(e) : ""));
    if (m.zp == 1) parts.push_back("z+");
    else if (m.zp > 1) parts.push_back("z+^" + std::to_string(m.zp));
    if (m.zm == 1) parts.push_back("z-");
    else if (m.zm > 1) parts.push_back("z-^" + std::to_string(m.zm));
    for (auto& [s, id] : m.w) parts.push_back("w" + std::to_string(s) + "," + eta_[id]);
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::string GreenRing::to_string(const GreenElem& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string ms = mono_to_string(m);
        if (a != 1 || ms == "1") {
            os << a.get_str();
            if (ms != "1") os << "*";
        }
        if (ms != "1") os << ms;
    }
    return os.str();
}

}  // namespace qqg
