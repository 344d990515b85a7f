#pragma once

/**
 * Exact arithmetic: arbitrary-precision integers and rationals, p-adic
 * valuation, and congruence of rationals modulo an integer.
 *
 * Congruence convention: a/b == c/d  (mod m) iff m divides the numerator
 * of a/b - c/d in lowest terms. This is defined only when both
 * denominators are coprime to m; otherwise the congruence has no meaning
 * and the operations below raise NonInvertibleDenominatorError instead of
 * guessing.
 *
 * Residues are always canonicalized to [0, m).
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace floorsums {

// Arbitrary-precision signed integer. GMP's mpz_class already gives exact
// arithmetic and lossless decimal round-trips, so it is used directly.
using Integer = mpz_class;

// Thrown by rational_mod/congruent when the denominator shares a factor
// with the modulus, i.e. the congruence is undefined.
class NonInvertibleDenominatorError : public std::domain_error {
public:
    explicit NonInvertibleDenominatorError(const std::string& what)
        : std::domain_error(what) {}
};

/// Strict decimal parse: optional sign then digits, nothing else.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& n);

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator. Zero is 0/1.
 */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(const Integer& n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(int n) : value_(static_cast<signed long>(n)) {}

    // Canonicalizes; denominator must be nonzero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Strict parse of "a" or "a/b"; canonicalizes, so "2/4" -> 1/2.
    static Rational parse(const std::string& text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return value_ == 0; }

    /// "a/b" in lowest terms; integers render without the "/1".
    std::string to_string() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws on divide by zero

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) {
        return !(lhs == rhs);
    }

private:
    mpq_class value_;  // invariant: canonical (lowest terms, denominator > 0)
};

/// x^e with e >= 0, exact.
Rational pow(const Rational& x, unsigned long e);

/**
 * Canonical representative of a residue class: value in [0, modulus),
 * modulus >= 2. Construction reduces any integer into range.
 */
class ResidueClass {
public:
    ResidueClass(const Integer& value, const Integer& modulus);

    const Integer& value() const { return value_; }
    const Integer& modulus() const { return modulus_; }

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

private:
    Integer value_;
    Integer modulus_;
};

/**
 * p-adic valuation of a rational, with a distinct infinity for zero
 * (v_p(0) is conventionally +inf; keeping it out of the integers avoids
 * arithmetic on infinities).
 */
class Valuation {
public:
    static Valuation infinite() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("valuation of zero has no finite value");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

/// v such that x = p^v * (a/b) with p dividing neither a nor b; infinite for x = 0.
/// p must be prime.
Valuation padic_valuation(const Rational& x, const Integer& p);

/// The unique r in [0, m) with denominator(x) * r == numerator(x) (mod m).
/// Throws NonInvertibleDenominatorError when gcd(denominator, m) > 1.
ResidueClass rational_mod(const Rational& x, const Integer& m);

/// True iff a and b fall in the same residue class mod m; requires both
/// denominators coprime to m.
bool congruent(const Rational& a, const Rational& b, const Integer& m);

/// Largest r with r^k <= n, by integer Newton iteration. n >= 0, k >= 1.
Integer integer_kth_root(const Integer& n, unsigned k);

/// Binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(const Integer& n, const Integer& k);

/// base^exp, exact.
Integer pow_integer(const Integer& base, unsigned long exp);

}  // namespace floorsums
