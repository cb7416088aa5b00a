#pragma once

#include <gmpxx.h>

#include <string>

#include "tutte/errors.hpp"

namespace tutte {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(p, q) does not canonicalize on its own.
inline Rat frac(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Canonical "p/q" with q > 0, gcd(p,q) = 1; "p/1" kept explicit so the
// serialized form is uniform.
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s.find('/') == std::string::npos ? s + "/1" : s, 10) != 0)
        throw InvalidGraph("malformed rational: " + s);
    if (r.get_den() <= 0)
        throw InvalidGraph("malformed rational (denominator): " + s);
    r.canonicalize();
    return r;
}

} // namespace tutte
