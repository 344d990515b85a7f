#pragma once

/**
 * Floor-sum families over primes, each with a brute-force evaluator built
 * on exact big-integer powers, plus closed forms where they exist. The
 * brute evaluators are the trust anchors: they never use the identities
 * they are meant to validate.
 */

#include "floorsums/bernoulli.hpp"
#include "floorsums/exact.hpp"

namespace floorsums {

/// sum_{i,j=1}^{p-1} floor(ij/p), term by term. p >= 2.
Integer grid_sum(const Integer& p);

/// (p-2)(p-1)^2/4; integral for every odd p >= 3.
Integer grid_sum_closed(const Integer& p);

/// sum_{k=1}^{(p-1)(p-2)} floor((kp)^(1/3)) with exact cube roots. p >= 3.
Integer cube_root_sum(const Integer& p);

/// (3p-5)(p-2)(p-1)/4; integral for every odd p >= 3.
Integer cube_root_sum_closed(const Integer& p);

/// sum_{k=1}^{p-r} floor(k^p/p). p odd prime, 1 <= r <= p-1.
Integer partial_fermat_sum(const Integer& p, long r);

/// True iff floor(n^p/p) = (n^p - n)/p holds exactly for every n in [1, p-1].
bool fermat_floor_identity_check(const Integer& p);

/// S_q(p) = sum_{k=1}^{p-1} floor(k^(2q+1)/p), brute. p >= 2, q >= 0.
Integer s_q_sum(const Integer& p, unsigned q);

/// S_q(p) via the binomial/Bernoulli-number double sum
///   (p-1)(p^2q - 1)/2
///   + (1/2) sum_{r=1}^{2q} [(-1)^r/(r+1)] C(2q+1, r)
///         sum_{l=0}^{r} C(r+1, l) B_l p^(2q+1-l).
/// Evaluated term by term exactly as written. q >= 1.
Rational s_q_closed_binomial(const Integer& p, unsigned q, BernoulliCache& cache);

/// S_q(p) via Bernoulli polynomial values:
///   [(B_{2q+2}(p+1) - B_{2q+2}(1)) + (B_{2q+2}(p) - B_{2q+2}(0))] / (2p(2q+2))
///   - (p^2q + p - 1)/2.
/// q >= 1; p >= 1 (plain polynomial evaluation, primality not required).
Rational s_q_closed_polynomial(const Integer& p, unsigned q, BernoulliCache& cache);

/// The factored closed forms for q = 1, 2, 3:
///   q=1: (p-1)(p-2)(p+1)/4
///   q=2: (1/12)(p-2)(p-1)(p+1)(2p^2 - 2p + 3)
///   q=3: (1/24)(p-2)(p-1)(p+1)(3p^4 - 6p^3 + 5p^2 - 2p + 6)
Rational s_factored_closed(const Integer& p, unsigned q);

/// True iff p^2 divides j^p + (p-j)^p for every j in [1, (p-1)/2].
bool pairing_congruence_check(const Integer& p);

}  // namespace floorsums
