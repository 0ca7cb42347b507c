#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace cfseq {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& v);

// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_decimal(std::string_view text);

// Number of significant bits of |v|; 0 for v == 0.
std::size_t bit_length(const BigInt& v);

BigInt pow(const BigInt& base, unsigned long exponent);

} // namespace cfseq
