#pragma once

#include "cfseq/bigint.hpp"

#include <string>

namespace cfseq {

inline constexpr unsigned kDefaultPrecision = 256;

/// Binary fixed-point real: value = mantissa * 2^-precision.
///
/// Every value carries a worst-case absolute error bound, counted in units
/// of 2^-precision ("ulps"). Arithmetic propagates the bound:
///   add/sub  e_a + e_b
///   mul      (|m_a| e_b + |m_b| e_a + e_a e_b) / 2^P, plus 1 for rounding
///   div      (e_a 2^P + (|m_q| + 1) e_b) / (|m_b| - e_b), plus 1
/// Operands of different precision are widened to the larger one.
class HighPrecReal
{
public:
    HighPrecReal() = default;
    HighPrecReal(BigInt mantissa, unsigned precision, BigInt error_ulps = 0);

    static HighPrecReal from_integer(const BigInt& v, unsigned precision);
    /// floor(num/den) at the given precision; error bound 1 ulp unless exact. den > 0.
    static HighPrecReal from_ratio(const BigInt& num, const BigInt& den, unsigned precision);

    const BigInt& mantissa() const noexcept { return mantissa_; }
    unsigned precision() const noexcept { return precision_; }
    const BigInt& error_ulps() const noexcept { return error_; }

    /// Rescale to another precision. Narrowing rounds toward -inf and adds 1 ulp.
    HighPrecReal with_precision(unsigned precision) const;

    /// Interval endpoints as exact (error-free) values.
    HighPrecReal lower() const;
    HighPrecReal upper() const;

    /// Exact value of the stored mantissa (error bound not included).
    mpq_class to_rational() const;
    double to_double() const;

    int sign() const { return sgn(mantissa_); }
    HighPrecReal abs() const;

    /// True iff the error bound is strictly below 2^exp2.
    bool error_below_pow2(long exp2) const;
    /// True iff |value| + error < 2^exp2, i.e. the represented interval sits inside (-2^exp2, 2^exp2).
    bool magnitude_below_pow2(long exp2) const;

    /// Decimal rendering rounded to `digits` fractional digits.
    std::string to_decimal(unsigned digits) const;

    HighPrecReal operator-() const;
    friend HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b);
    friend HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b);
    friend HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b);
    friend HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b);
    friend HighPrecReal operator*(const HighPrecReal& a, const BigInt& k);
    friend HighPrecReal operator/(const HighPrecReal& a, const BigInt& k);

private:
    BigInt mantissa_;
    unsigned precision_ = kDefaultPrecision;
    BigInt error_;
};

inline HighPrecReal operator*(const BigInt& k, const HighPrecReal& a) { return a * k; }

// The intervals [v - e, v + e] are disjoint and ordered.
bool definitely_less(const HighPrecReal& a, const HighPrecReal& b);
inline bool definitely_greater(const HighPrecReal& a, const HighPrecReal& b) { return definitely_less(b, a); }

HighPrecReal pow(const HighPrecReal& base, unsigned exponent);

/// sqrt(n) for n >= 0, error < 1 ulp.
HighPrecReal sqrt_integer(const BigInt& n, unsigned precision);

/// ln 2, error <= 2 ulps.
HighPrecReal ln2(unsigned precision);

/// ln(num/den) for num, den > 0, error <= 2 ulps (contract: <= 2^(4-P)).
///
/// The ratio is normalised to t * 2^s with t in [1, 2), then
/// ln t = 2 atanh((t - 1)/(t + 1)) is summed at P + guard bits. Huge
/// operands are truncated to their leading bits first; the truncation is
/// monotone, so num >= den still yields a nonnegative result.
HighPrecReal log_ratio(const BigInt& num, const BigInt& den, unsigned precision);

/// ln x for x >= 1. Same contract as log_ratio.
HighPrecReal log_bigint(const BigInt& x, unsigned precision);

} // namespace cfseq
