#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace isotwist::detail {

// Prime factorization of |n| (n != 0): trial division, then Pollard-Brent rho.
std::map<mpz_class, int> factorize(const mpz_class& n);

// Distinct primes dividing |n|, ascending. Empty for |n| = 1.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

}  // namespace isotwist::detail
