#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polydecomp {

using Integer = mpz_class;

// gmpxx arithmetic always yields canonical values (lowest terms, positive
// denominator); only construction from a raw numerator/denominator pair
// needs an explicit canonicalize, which make_rational performs.
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);

/// Accepts an optional sign followed by `a` or `a/b` with decimal digits.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);

/// Least common multiple of the denominators in [first, last).
template <typename It> Integer common_denominator(It first, It last) {
    Integer l = 1;
    for (; first != last; ++first)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->get_den_mpz_t());
    return l;
}

} // namespace polydecomp
