#include "cfseq/rational.hpp"

#include <stdexcept>

namespace cfseq {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::reciprocal() const
{
    if (value_ == 0)
        throw std::domain_error("Rational: reciprocal of zero");
    return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.value_ == 0)
        throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_decimal(text));
    const BigInt den = parse_decimal(std::string_view(text).substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_decimal(std::string_view(text).substr(0, slash)), den);
}

} // namespace cfseq
