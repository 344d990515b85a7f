#pragma once

/**
 * Exact Bernoulli numbers and polynomials.
 *
 * Convention: B_1 = -1/2, i.e. the B_n defined by the recurrence
 * sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1. Under this convention the
 * power-sum identity reads
 *
 *   sum_{k=1}^{r-1} k^n = (B_{n+1}(r) - B_{n+1}(0)) / (n + 1),
 *
 * and B_n(1) = B_n(0) for n >= 2.
 */

#include "floorsums/exact.hpp"

#include <mutex>
#include <vector>

namespace floorsums {

/**
 * Memo of B_0..B_n, grown on demand by the O(n^2) rational recurrence.
 * Internally synchronized: concurrent callers see a consistent, monotone
 * cache and identical values regardless of interleaving.
 */
class BernoulliCache {
public:
    /// B_n, extending the cache as needed.
    Rational number(unsigned n);

    /// Copy of B_0..B_n in one lock acquisition.
    std::vector<Rational> numbers_up_to(unsigned n);

    unsigned computed_up_to() const;

private:
    void extend(unsigned n);  // caller holds mu_

    mutable std::mutex mu_;
    std::vector<Rational> values_;
};

Rational bernoulli_number(unsigned n, BernoulliCache& cache);

/// B_n(x) = sum_{k=0}^{n} C(n, k) B_k x^(n-k), evaluated exactly.
Rational bernoulli_polynomial(unsigned n, const Rational& x, BernoulliCache& cache);

/// sum_{k=1}^{upper-1} k^exponent via (B_{n+1}(upper) - B_{n+1}(0))/(n+1).
/// exponent >= 1, upper >= 1; the result is always an integer.
Rational faulhaber_sum(unsigned exponent, const Integer& upper, BernoulliCache& cache);

/// Checks B_n(-x) = B_n(x+1) exactly; n must be even.
bool reflection_check(unsigned n, const Rational& x, BernoulliCache& cache);

/// von Staudt-Clausen: B_n + sum of 1/q over primes q with (q-1) | n is an
/// integer. n even, n >= 2.
bool von_staudt_clausen_check(unsigned n, BernoulliCache& cache);

}  // namespace floorsums
