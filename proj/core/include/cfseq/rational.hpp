#pragma once

#include "cfseq/bigint.hpp"

#include <compare>
#include <string>

namespace cfseq {

/// Reduced fraction num/den with den >= 1.
class Rational
{
public:
    Rational() = default;
    Rational(const BigInt& integer) : value_(integer) {}
    /// Throws std::domain_error for den == 0.
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class q);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& mpq() const noexcept { return value_; }

    BigInt floor() const;
    int sign() const { return sgn(value_); }
    Rational reciprocal() const;

    std::string to_string() const;

    Rational& operator+=(const Rational& o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        value_ -= o.value_;
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

/// Parses "p/q" or "p". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace cfseq
