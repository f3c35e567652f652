#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace apollonian {

// Exact arbitrary-precision rational. All algebraic identities in this
// library are checked with exact equality; floating point appears only in
// geometry predicates and rendering.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

// Canonical lowest-terms text form: bare integer, or "p/q" with q > 0.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Accepts "p", "p/q", with optional sign; canonicalizes.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

using Vec2Q = std::array<Rational, 2>;

}  // namespace apollonian
