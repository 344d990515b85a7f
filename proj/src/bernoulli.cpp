#include "floorsums/bernoulli.hpp"

#include "floorsums/primes.hpp"

namespace floorsums {

Rational BernoulliCache::number(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    return values_[n];
}

std::vector<Rational> BernoulliCache::numbers_up_to(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    return std::vector<Rational>(values_.begin(), values_.begin() + n + 1);
}

unsigned BernoulliCache::computed_up_to() const {
    std::lock_guard<std::mutex> lock(mu_);
    return values_.empty() ? 0 : static_cast<unsigned>(values_.size() - 1);
}

void BernoulliCache::extend(unsigned n) {
    if (values_.empty()) values_.push_back(Rational(1));  // B_0
    // B_n = -(1/(n+1)) sum_{k=0}^{n-1} C(n+1, k) B_k
    for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
        Rational sum;
        Integer coeff = 1;  // C(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            sum += Rational(coeff) * values_[k];
            coeff = coeff * (m + 1 - k) / (k + 1);  // -> C(m+1, k+1)
        }
        values_.push_back(-sum / Rational(Integer(m + 1)));
    }
}

Rational bernoulli_number(unsigned n, BernoulliCache& cache) {
    return cache.number(n);
}

Rational bernoulli_polynomial(unsigned n, const Rational& x, BernoulliCache& cache) {
    const std::vector<Rational> b = cache.numbers_up_to(n);
    // Horner over k: B_n(x) = (..(C(n,0)B_0 x + C(n,1)B_1) x + ..) + C(n,n)B_n
    Rational acc;
    Integer coeff = 1;  // C(n, 0)
    for (unsigned k = 0; k <= n; ++k) {
        acc = acc * x + Rational(coeff) * b[k];
        coeff = coeff * (n - k) / (k + 1);  // -> C(n, k+1)
    }
    return acc;
}

Rational faulhaber_sum(unsigned exponent, const Integer& upper, BernoulliCache& cache) {
    if (exponent < 1) throw std::invalid_argument("faulhaber_sum needs exponent >= 1");
    if (upper < 1) throw std::invalid_argument("faulhaber_sum needs upper >= 1");
    const Rational at_upper = bernoulli_polynomial(exponent + 1, Rational(upper), cache);
    return (at_upper - cache.number(exponent + 1)) / Rational(Integer(exponent + 1));
}

bool reflection_check(unsigned n, const Rational& x, BernoulliCache& cache) {
    if (n % 2 != 0) throw std::invalid_argument("reflection identity needs even degree");
    return bernoulli_polynomial(n, -x, cache) ==
           bernoulli_polynomial(n, x + Rational(1), cache);
}

bool von_staudt_clausen_check(unsigned n, BernoulliCache& cache) {
    if (n % 2 != 0 || n < 2)
        throw std::invalid_argument("von Staudt-Clausen check needs even n >= 2");
    Rational sum = cache.number(n);
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const Integer q = d + 1;
        if (is_prime(q)) sum += Rational(Integer(1), q);
    }
    return sum.is_integer();
}

}  // namespace floorsums
