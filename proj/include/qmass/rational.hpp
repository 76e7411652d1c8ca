#pragma once

#include <gmpxx.h>

#include <string>

namespace qmass {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow_int(const BigInt& base, unsigned long exp);
Rational pow_rational(const Rational& base, unsigned long exp);

/* "num/den", or bare "num" when the denominator is 1. */
std::string rational_string(const Rational& q);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace qmass
