#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over GMP integers.
 *
 * Every intersection number, coefficient and discrepancy in the library is a
 * Rational. Values are always kept in lowest terms with a positive
 * denominator, so structural equality is numeric equality.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ballq {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& value) : value_(value) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Exact integer value; throws std::domain_error if not integral or out of range.
    long to_long() const;

    Rational abs() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// Binomial coefficient C(n, k) for small non-negative arguments.
Integer binomial(unsigned long n, unsigned long k);

/// True iff value is a perfect square (value >= 0).
bool is_perfect_square(const Integer& value);

}  // namespace ballq
