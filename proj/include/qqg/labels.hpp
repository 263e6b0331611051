#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace qqg {

// Tagged name of an indecomposable class.
//   Simple(l)          V_l,        1 <= l <= n
//   BlockSimple(t,r)   V(t,r),     1 <= t <= n-1, r reduced mod n
//   Proj(l)            P_l,        1 <= l <= n-1
//   Syzygy(sign,s,l)   Omega^{sign*s} V_l, s >= 1
//   Band(s,l,eta)      M_s(l,eta), eta an opaque label; symbolic only
struct IndecompLabel {
    enum class Kind { Simple, BlockSimple, Proj, Syzygy, Band };
    Kind kind = Kind::Simple;
    int l = 1;             // Simple/Proj/Syzygy/Band main index
    int t = 0, r = 0;      // BlockSimple
    int sign = 0, s = 0;   // Syzygy (+1/-1), Band (s, sign unused)
    std::string eta;       // Band

    static IndecompLabel simple(int l) { return {Kind::Simple, l, 0, 0, 0, 0, ""}; }
    static IndecompLabel block_simple(int t, int r, int n) {
        int rr = ((r % n) + n) % n;
        return {Kind::BlockSimple, 0, t, rr, 0, 0, ""};
    }
    static IndecompLabel proj(int l) { return {Kind::Proj, l, 0, 0, 0, 0, ""}; }
    static IndecompLabel syzygy(int sign, int s, int l) {
        return {Kind::Syzygy, l, 0, 0, sign, s, ""};
    }
    static IndecompLabel band(int s, int l, std::string eta) {
        return {Kind::Band, l, 0, 0, 0, s, std::move(eta)};
    }

    auto operator<=>(const IndecompLabel&) const = default;

    int dim(int n) const {
        switch (kind) {
            case Kind::Simple: return l;
            case Kind::BlockSimple: return n;
            case Kind::Proj: return 2 * n;
            case Kind::Syzygy: return s % 2 == 1 ? s * n + (n - l) : s * n + l;
            case Kind::Band: return s * n;  // composition factors V_l, V_{n-l}, each s times
        }
        return 0;
    }

    std::string to_string() const;
    static IndecompLabel parse(const std::string& s, int n);
};

// Multiset of labels with multiplicities; right-hand side of a
// decomposition statement.
using DecompClaim = std::map<IndecompLabel, int>;

inline int total_dim(const DecompClaim& c, int n) {
    int d = 0;
    for (const auto& [lab, mult] : c) d += mult * lab.dim(n);
    return d;
}

std::string claim_to_string(const DecompClaim& c);

}  // namespace qqg
