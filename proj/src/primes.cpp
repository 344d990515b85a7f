#include "floorsums/primes.hpp"

#include <cstdint>

namespace floorsums {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return result;
}

// Miller-Rabin with the witness set {2,...,37}, deterministic for n < 2^64.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    int s = 0;
    uint64_t d = n - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PrimeRange::PrimeRange(Integer lo, Integer hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower < 2) throw std::invalid_argument("prime range lower bound must be >= 2");
    if (upper < lower) throw std::invalid_argument("prime range upper bound below lower");
}

std::vector<Integer> primes_in(const PrimeRange& range) {
    std::vector<Integer> primes;
    if (range.lower <= 2 && 2 <= range.upper) primes.push_back(2);
    Integer n = range.lower <= 3 ? Integer(3) : range.lower;
    if (n % 2 == 0) ++n;
    for (; n <= range.upper; n += 2)
        if (is_prime(n)) primes.push_back(n);
    return primes;
}

ResidueClass factorial_mod(const Integer& n, const Integer& modulus) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    Integer acc = 1;
    for (Integer i = 2; i <= n; ++i) acc = acc * i % modulus;
    return ResidueClass(acc, modulus);
}

}  // namespace floorsums
