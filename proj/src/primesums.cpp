#include "floorsums/primesums.hpp"

#include "floorsums/primes.hpp"

namespace floorsums {

namespace {

void require_odd_prime(const Integer& p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + " needs an odd prime p");
    if (!p.fits_ulong_p())
        throw std::invalid_argument(std::string(who) + ": p too large to use as an exponent");
}

unsigned long exponent_2q1(unsigned q) {
    return 2ul * q + 1ul;
}

// product / 4, which the closed forms guarantee to be exact for odd p
Integer exact_quarter(Integer product, const char* who) {
    if (!mpz_divisible_ui_p(product.get_mpz_t(), 4))
        throw std::invalid_argument(std::string(who) + " is not integral for this p");
    return product / 4;
}

}  // namespace

Integer grid_sum(const Integer& p) {
    if (p < 2) throw std::invalid_argument("grid_sum needs p >= 2");
    Integer total = 0;
    for (Integer i = 1; i < p; ++i)
        for (Integer j = 1; j < p; ++j) total += i * j / p;
    return total;
}

Integer grid_sum_closed(const Integer& p) {
    if (p < 3) throw std::invalid_argument("grid_sum_closed needs p >= 3");
    return exact_quarter((p - 2) * (p - 1) * (p - 1), "grid closed form");
}

Integer cube_root_sum(const Integer& p) {
    if (p < 3) throw std::invalid_argument("cube_root_sum needs p >= 3");
    const Integer upper = (p - 1) * (p - 2);
    Integer total = 0;
    for (Integer k = 1; k <= upper; ++k) total += integer_kth_root(k * p, 3);
    return total;
}

Integer cube_root_sum_closed(const Integer& p) {
    if (p < 3) throw std::invalid_argument("cube_root_sum_closed needs p >= 3");
    return exact_quarter((3 * p - 5) * (p - 2) * (p - 1), "cube-root closed form");
}

Integer partial_fermat_sum(const Integer& p, long r) {
    require_odd_prime(p, "partial_fermat_sum");
    if (r < 1 || Integer(r) > p - 1)
        throw std::invalid_argument("partial_fermat_sum needs 1 <= r <= p-1");
    const unsigned long exp = p.get_ui();
    const Integer upper = p - r;
    Integer total = 0;
    for (Integer k = 1; k <= upper; ++k) total += pow_integer(k, exp) / p;
    return total;
}

bool fermat_floor_identity_check(const Integer& p) {
    require_odd_prime(p, "fermat_floor_identity_check");
    const unsigned long exp = p.get_ui();
    for (Integer n = 1; n < p; ++n) {
        const Integer power = pow_integer(n, exp);
        if (!mpz_divisible_p(Integer(power - n).get_mpz_t(), p.get_mpz_t())) return false;
        if (power / p != (power - n) / p) return false;
    }
    return true;
}

Integer s_q_sum(const Integer& p, unsigned q) {
    if (p < 2) throw std::invalid_argument("s_q_sum needs p >= 2");
    const unsigned long exp = exponent_2q1(q);
    Integer total = 0;
    for (Integer k = 1; k < p; ++k) total += pow_integer(k, exp) / p;
    return total;
}

Rational s_q_closed_binomial(const Integer& p, unsigned q, BernoulliCache& cache) {
    if (q < 1) throw std::invalid_argument("closed forms are defined for q >= 1");
    const unsigned long n = exponent_2q1(q);  // 2q+1
    const std::vector<Rational> b = cache.numbers_up_to(2 * q);

    Rational outer;
    for (unsigned long r = 1; r <= 2 * q; ++r) {
        Rational inner;
        for (unsigned long l = 0; l <= r; ++l)
            inner += Rational(binomial(Integer(r + 1), Integer(l))) * b[l] *
                     Rational(pow_integer(p, n - l));
        Rational term = Rational(binomial(Integer(n), Integer(r))) * inner /
                        Rational(Integer(r + 1));
        outer += (r % 2 == 0) ? term : -term;
    }
    const Rational leading(Integer((p - 1) * (pow_integer(p, 2 * q) - 1)), Integer(2));
    return leading + outer / Rational(2);
}

Rational s_q_closed_polynomial(const Integer& p, unsigned q, BernoulliCache& cache) {
    if (q < 1) throw std::invalid_argument("closed forms are defined for q >= 1");
    if (p < 1) throw std::invalid_argument("s_q_closed_polynomial needs p >= 1");
    const unsigned n = 2 * q + 2;
    const Rational b_n = cache.number(n);  // = B_n(0) = B_n(1) for even n
    const Rational at_p1 = bernoulli_polynomial(n, Rational(Integer(p + 1)), cache);
    const Rational at_p = bernoulli_polynomial(n, Rational(p), cache);
    const Rational numerator = (at_p1 - b_n) + (at_p - b_n);
    const Rational tail(Integer(pow_integer(p, 2 * q) + p - 1), Integer(2));
    return numerator / Rational(Integer(2 * p * n)) - tail;
}

Rational s_factored_closed(const Integer& p, unsigned q) {
    const Integer base = (p - 2) * (p - 1) * (p + 1);
    switch (q) {
        case 1:
            return Rational(base, Integer(4));
        case 2:
            return Rational(base * (2 * p * p - 2 * p + 3), Integer(12));
        case 3: {
            const Integer quartic =
                3 * pow_integer(p, 4) - 6 * pow_integer(p, 3) + 5 * p * p - 2 * p + 6;
            return Rational(base * quartic, Integer(24));
        }
        default:
            throw std::invalid_argument("factored closed forms exist for q in {1,2,3}");
    }
}

bool pairing_congruence_check(const Integer& p) {
    require_odd_prime(p, "pairing_congruence_check");
    const unsigned long exp = p.get_ui();
    const Integer p2 = p * p;
    const Integer half = (p - 1) / 2;
    for (Integer j = 1; j <= half; ++j) {
        const Integer sum = pow_integer(j, exp) + pow_integer(p - j, exp);
        if (!mpz_divisible_p(sum.get_mpz_t(), p2.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace floorsums
