#include "floorsums/exact.hpp"

#include "floorsums/primes.hpp"

#include <cctype>

namespace floorsums {

namespace {

bool valid_decimal(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    if (!valid_decimal(text))
        throw std::invalid_argument("not a decimal integer: \"" + text + "\"");
    // mpz accepts the digits; the leading '+' is ours to strip.
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)),
                    parse_integer(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::invalid_argument("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& x, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(num, den);  // already coprime, canonicalize is a no-op
}

ResidueClass::ResidueClass(const Integer& value, const Integer& modulus)
    : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

Valuation padic_valuation(const Rational& x, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic valuation needs a prime p");
    if (x.is_zero()) return Valuation::infinite();
    Integer reduced;
    long v = static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), x.numerator().get_mpz_t(), p.get_mpz_t()));
    v -= static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), x.denominator().get_mpz_t(), p.get_mpz_t()));
    return Valuation::finite(v);
}

ResidueClass rational_mod(const Rational& x, const Integer& m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    const Integer den = x.denominator();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NonInvertibleDenominatorError(
            "denominator " + to_string(den) + " not invertible mod " + to_string(m) +
            "; congruence undefined");
    return ResidueClass(x.numerator() * inv, m);
}

bool congruent(const Rational& a, const Rational& b, const Integer& m) {
    return rational_mod(a, m) == rational_mod(b, m);
}

Integer integer_kth_root(const Integer& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("root of a negative integer");
    if (k == 0) throw std::invalid_argument("zeroth root");
    if (k == 1 || n == 0 || n == 1) return n;

    // Newton for x^k = n, started above the root so iterates descend to it:
    // x' = ((k-1)x + n / x^(k-1)) / k.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = 1;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), bits / k + 1);
    while (true) {
        Integer xk1;
        mpz_pow_ui(xk1.get_mpz_t(), x.get_mpz_t(), k - 1);
        Integer next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    // settle on the exact floor
    while (pow_integer(x, k) > n) --x;
    while (pow_integer(x + 1, k) <= n) ++x;
    return x;
}

Integer binomial(const Integer& n, const Integer& k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    Integer small = k <= n - k ? k : n - k;
    if (!small.fits_ulong_p())
        throw std::invalid_argument("binomial argument out of range");
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), small.get_ui());
    return result;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

}  // namespace floorsums
