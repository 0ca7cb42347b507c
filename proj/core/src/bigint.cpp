#include "cfseq/bigint.hpp"

#include <stdexcept>

namespace cfseq {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    // mpz_set_str rejects a leading '+'
    const std::string digits(text[0] == '+' ? text.substr(1) : text);
    BigInt v;
    if (v.set_str(digits, 10) != 0)
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return v;
}

std::size_t bit_length(const BigInt& v)
{
    if (v == 0)
        return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

} // namespace cfseq
