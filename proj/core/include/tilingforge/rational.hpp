#pragma once

#include <gmpxx.h>

#include <string>

#include "tilingforge/errors.hpp"

namespace tilingforge {

// Arbitrary-precision rational. mpq_class does not canonicalize two-argument
// constructions on its own, so construction goes through make_rat/parse_rat.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", optional leading '-', arbitrary precision.
inline Rat parse_rat(const std::string& text) {
    mpq_class r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw InputError("malformed rational '" + text + "'");
    if (r.get_den() == 0) throw InputError("rational with zero denominator '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// r reduced into [0,1).
inline Rat rat_mod1(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    f.canonicalize();
    return f;
}

}  // namespace tilingforge
