#pragma once

#include <gmpxx.h>

#include <string>

namespace dsm {

using Int = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, denominator > 0

// Accepts "n" or "p/q" (q != 0); canonicalizes.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Int& value);

bool is_integer(const Rational& value);

// Denominator of the reduced fraction; throws if it does not fit an
// unsigned long (orders and conductors here are tiny).
unsigned long denominator_ulong(const Rational& value);

unsigned long gcd_ulong(unsigned long a, unsigned long b);
unsigned long lcm_ulong(unsigned long a, unsigned long b);

// C(top, k), zero when top < k. Series expansions never need the
// generalized negative-argument binomial.
Int binomial(long top, unsigned long k);

Int factorial(unsigned long n);

}  // namespace dsm
