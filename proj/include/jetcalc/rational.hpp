#ifndef JETCALC_RATIONAL_HPP
#define JETCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "jetcalc/errors.hpp"

namespace jetcalc {

// Exact rational coefficients. mpq_class keeps values canonical (reduced,
// positive denominator, zero as 0/1), which is exactly the invariant the
// rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char c : s)
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw parse_error("bad rational literal: '" + s + "'");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: '" + s + "'");
    }
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace jetcalc

#endif
