#ifndef AFFPOW_RATIONAL_HPP
#define AFFPOW_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace affpow {

using Int = mpz_class;

// Arbitrary-precision rational, always canonical (reduced, positive
// denominator). mpq_class keeps this invariant through arithmetic.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or a bare integer string.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

Int binomial(const Int& n, unsigned long k);

// x(x-1)...(x-i+1); 1 for i = 0, and 0 when 0 <= x < i.
Int falling_factorial(const Int& x, unsigned long i);

// Euler totient, by trial-division factorization (desk-scale arguments).
unsigned long totient(unsigned long n);

// Total bit size of numerator and denominator; pivot-simplicity measure.
std::size_t bit_size(const Rational& q);

}  // namespace affpow

#endif
