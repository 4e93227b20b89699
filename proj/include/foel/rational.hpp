#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "foel/errors.hpp"

namespace foel {

// Exact arbitrary-precision rational scalar used everywhere identities are
// verified. Float versions exist only in the eigenvalue layer.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p/q" or "p/q" (base 10). Used for the JSON "q" field and --q.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw DomainError("not a rational: '" + text + "'");
    if (r.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// r^e for integer e (negative allowed; r must be nonzero then).
inline Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (e < 0 && r == 0) throw DomainError("0 to a negative power");
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), n);
    out.canonicalize();
    if (e < 0) return Rational(1) / out;
    return out;
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace foel
