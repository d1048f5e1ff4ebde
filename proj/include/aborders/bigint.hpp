#pragma once

#include <gmpxx.h>

namespace aborders {

using BigInt = mpz_class;

// binom(n, k) with the usual convention binom = 0 for k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

// base^exp for exp >= 0.
BigInt power(long base, long exp);

// Exact quotient; throws if the division leaves a remainder.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

}  // namespace aborders
