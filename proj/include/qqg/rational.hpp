#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qqg {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical wire form "p/q" with q >= 1 and gcd(|p|,q) = 1.
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (sgn(r.get_den()) <= 0)
        throw std::invalid_argument("bad rational literal (denominator): '" + s + "'");
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace qqg
