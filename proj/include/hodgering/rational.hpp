#ifndef HODGERING_RATIONAL_HPP
#define HODGERING_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hodgering {

// Exact rational scalar. mpq_class keeps the canonical form we need:
// gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q". Used by the polynomial parser and the CLI
// point reader.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in: " + text);
    return q;
}

// Decimal-free "p/q" form; integers print without the slash.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline size_t numerator_bits(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
}

}  // namespace hodgering

#endif
