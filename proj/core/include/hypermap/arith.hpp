#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypermap {

// Signed arbitrary-precision integer. Counts are stored in this type but are
// only ever inserted into tables after a nonnegativity check.
using BigInt = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

// Returns a / b and throws InexactDivision if b does not divide a.
// `what` is folded into the error message.
BigInt exact_divide(const BigInt& a, const BigInt& b, std::string_view what = {});

// Makes `q` canonical; gmpxx leaves that to the caller after raw construction.
inline Rational canonical(Rational q)
{
    q.canonicalize();
    return q;
}

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Decimal rendering and parsing. parse_natural rejects signs, blanks and
// anything that is not a plain run of digits.
std::string to_decimal(const BigInt& x);
bool parse_natural(std::string_view text, BigInt& out);

} // namespace hypermap
