#ifndef IWCONTRACT_RATIONAL_HPP
#define IWCONTRACT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace iwcontract {

/// Exact arbitrary-precision rational scalar. All arithmetic in the
/// library is over Rat; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". Throws Error on malformed input.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
    r.canonicalize();
    return r;
}

/// Canonical form: "p/q" with q > 0, or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc(1), b = base;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return acc;
}

} // namespace iwcontract

#endif
