#pragma once

#include "floorsums/exact.hpp"

#include <vector>

namespace floorsums {

/// Exact primality test. Deterministic Miller-Rabin below 2^64; larger
/// inputs fall back to GMP's probable-prime test.
bool is_prime(const Integer& n);

/// Closed interval of candidate primes, lower >= 2.
struct PrimeRange {
    PrimeRange(Integer lower, Integer upper);
    Integer lower;
    Integer upper;
};

/// Strictly increasing primes within the range.
std::vector<Integer> primes_in(const PrimeRange& range);

/// n! mod modulus, reduced at every step of the running product.
ResidueClass factorial_mod(const Integer& n, const Integer& modulus);

}  // namespace floorsums
