#pragma once

#include <gmpxx.h>

#include <string>

namespace hsmult {

// Exact arbitrary-precision integers and rationals. Rat values are kept
// canonical (lowest terms, positive denominator); construct through
// make_rat when numerator/denominator arrive separately.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Parses "a" or "a/b" with optional sign; rejects zero denominators.
Rat rat_from_string(const std::string& s);

Int binomial(int n, int k);
Int factorial(int n);

}  // namespace hsmult
