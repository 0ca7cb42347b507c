#include "cfseq/high_prec.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cfseq {

namespace {

BigInt shl(const BigInt& v, unsigned long k)
{
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
}

BigInt floor_shr(const BigInt& v, unsigned long k)
{
    BigInt r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
}

BigInt ceil_shr(const BigInt& v, unsigned long k)
{
    BigInt r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
    return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt abs_of(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// 2^exp as an integer; exp may be negative, in which case the bound is < 1.
bool below_pow2(const BigInt& v, long exp)
{
    if (exp < 0)
        return v <= 0;
    BigInt limit;
    mpz_setbit(limit.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
    return v < limit;
}

std::pair<HighPrecReal, HighPrecReal> aligned(const HighPrecReal& a, const HighPrecReal& b)
{
    const unsigned p = std::max(a.precision(), b.precision());
    return {a.with_precision(p), b.with_precision(p)};
}

// atanh(z / 2^w) * 2^w for |z| <= 2^w / 2, truncated term by term.
// Returns the mantissa and an error bound in units of 2^-w.
std::pair<BigInt, BigInt> atanh_fixed(const BigInt& z, unsigned w)
{
    BigInt z2;
    mpz_mul(z2.get_mpz_t(), z.get_mpz_t(), z.get_mpz_t());
    mpz_tdiv_q_2exp(z2.get_mpz_t(), z2.get_mpz_t(), w);

    BigInt sum = 0;
    BigInt power = z;
    BigInt term;
    unsigned long terms = 0;
    for (unsigned long k = 0;; ++k) {
        mpz_tdiv_q_ui(term.get_mpz_t(), power.get_mpz_t(), 2 * k + 1);
        if (term == 0)
            break;
        sum += term;
        ++terms;
        mpz_mul(power.get_mpz_t(), power.get_mpz_t(), z2.get_mpz_t());
        mpz_tdiv_q_2exp(power.get_mpz_t(), power.get_mpz_t(), w);
    }
    // each truncation (term, power, z2) costs < 1 ulp and the dropped tail is
    // below the first vanishing term
    return {sum, BigInt(3 * terms + 4)};
}

unsigned guard_bits(unsigned precision, std::size_t scale_bits)
{
    return 40 + static_cast<unsigned>(scale_bits) + static_cast<unsigned>(bit_length(BigInt(precision)));
}

// ln 2 at w bits, error in units of 2^-w.
std::pair<BigInt, BigInt> ln2_fixed(unsigned w)
{
    BigInt third;
    mpz_setbit(third.get_mpz_t(), w);
    mpz_fdiv_q_ui(third.get_mpz_t(), third.get_mpz_t(), 3);
    auto [v, e] = atanh_fixed(third, w);
    return {BigInt(2 * v), BigInt(2 * e + 2)};
}

} // namespace

HighPrecReal::HighPrecReal(BigInt mantissa, unsigned precision, BigInt error_ulps)
    : mantissa_(std::move(mantissa)), precision_(precision), error_(std::move(error_ulps))
{
    if (error_ < 0)
        throw std::invalid_argument("negative error bound");
}

HighPrecReal HighPrecReal::from_integer(const BigInt& v, unsigned precision)
{
    return HighPrecReal(shl(v, precision), precision);
}

HighPrecReal HighPrecReal::from_ratio(const BigInt& num, const BigInt& den, unsigned precision)
{
    if (den <= 0)
        throw std::domain_error("from_ratio: denominator must be positive");
    BigInt q, r;
    const BigInt scaled = shl(num, precision);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return HighPrecReal(q, precision, r == 0 ? 0 : 1);
}

HighPrecReal HighPrecReal::with_precision(unsigned precision) const
{
    if (precision == precision_)
        return *this;
    if (precision > precision_) {
        const unsigned k = precision - precision_;
        return HighPrecReal(shl(mantissa_, k), precision, shl(error_, k));
    }
    const unsigned k = precision_ - precision;
    BigInt m = floor_shr(mantissa_, k);
    const bool exact = shl(m, k) == mantissa_;
    return HighPrecReal(std::move(m), precision, ceil_shr(error_, k) + (exact ? 0 : 1));
}

HighPrecReal HighPrecReal::lower() const { return HighPrecReal(mantissa_ - error_, precision_); }
HighPrecReal HighPrecReal::upper() const { return HighPrecReal(mantissa_ + error_, precision_); }

mpq_class HighPrecReal::to_rational() const
{
    mpq_class q(mantissa_, shl(BigInt(1), precision_));
    q.canonicalize();
    return q;
}

double HighPrecReal::to_double() const
{
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(exp) - static_cast<int>(precision_));
}

HighPrecReal HighPrecReal::abs() const { return HighPrecReal(abs_of(mantissa_), precision_, error_); }

bool HighPrecReal::error_below_pow2(long exp2) const
{
    return below_pow2(error_, exp2 + static_cast<long>(precision_));
}

bool HighPrecReal::magnitude_below_pow2(long exp2) const
{
    return below_pow2(abs_of(mantissa_) + error_, exp2 + static_cast<long>(precision_));
}

std::string HighPrecReal::to_decimal(unsigned digits) const
{
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
    // round half up on the magnitude
    BigInt scaled = abs_of(mantissa_) * ten_pow;
    if (precision_ > 0)
        scaled += shl(BigInt(1), precision_ - 1);
    scaled = floor_shr(scaled, precision_);

    BigInt int_part, frac_part;
    mpz_fdiv_qr(int_part.get_mpz_t(), frac_part.get_mpz_t(), scaled.get_mpz_t(), ten_pow.get_mpz_t());
    std::string out = (mantissa_ < 0 && scaled != 0) ? "-" : "";
    out += int_part.get_str();
    if (digits > 0) {
        std::string frac = frac_part.get_str();
        out += '.';
        out += std::string(digits - frac.size(), '0');
        out += frac;
    }
    return out;
}

HighPrecReal HighPrecReal::operator-() const { return HighPrecReal(-mantissa_, precision_, error_); }

HighPrecReal operator+(const HighPrecReal& a, const HighPrecReal& b)
{
    auto [x, y] = aligned(a, b);
    return HighPrecReal(x.mantissa_ + y.mantissa_, x.precision_, x.error_ + y.error_);
}

HighPrecReal operator-(const HighPrecReal& a, const HighPrecReal& b)
{
    auto [x, y] = aligned(a, b);
    return HighPrecReal(x.mantissa_ - y.mantissa_, x.precision_, x.error_ + y.error_);
}

HighPrecReal operator*(const HighPrecReal& a, const HighPrecReal& b)
{
    auto [x, y] = aligned(a, b);
    const unsigned p = x.precision_;
    const BigInt product = x.mantissa_ * y.mantissa_;
    BigInt m = floor_shr(product, p);
    const bool exact = shl(m, p) == product;

    const BigInt spread = abs_of(x.mantissa_) * y.error_ + abs_of(y.mantissa_) * x.error_ + x.error_ * y.error_;
    return HighPrecReal(std::move(m), p, ceil_shr(spread, p) + (exact ? 0 : 1));
}

HighPrecReal operator/(const HighPrecReal& a, const HighPrecReal& b)
{
    auto [x, y] = aligned(a, b);
    const unsigned p = x.precision_;
    const BigInt denom_floor = abs_of(y.mantissa_) - y.error_;
    if (denom_floor <= 0)
        throw std::domain_error("HighPrecReal division: divisor interval contains zero");

    BigInt q, r;
    const BigInt scaled = shl(x.mantissa_, p);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), y.mantissa_.get_mpz_t());

    const BigInt spread = shl(x.error_, p) + (abs_of(q) + 1) * y.error_;
    BigInt err = ceil_div(spread, denom_floor) + (r == 0 ? 0 : 1);
    return HighPrecReal(std::move(q), p, std::move(err));
}

HighPrecReal operator*(const HighPrecReal& a, const BigInt& k)
{
    return HighPrecReal(a.mantissa_ * k, a.precision_, a.error_ * abs_of(k));
}

HighPrecReal operator/(const HighPrecReal& a, const BigInt& k)
{
    if (k == 0)
        throw std::domain_error("HighPrecReal division by zero");
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.mantissa_.get_mpz_t(), k.get_mpz_t());
    return HighPrecReal(std::move(q), a.precision_, ceil_div(a.error_, abs_of(k)) + (r == 0 ? 0 : 1));
}

bool definitely_less(const HighPrecReal& a, const HighPrecReal& b)
{
    auto [x, y] = aligned(a, b);
    return x.mantissa() + x.error_ulps() < y.mantissa() - y.error_ulps();
}

HighPrecReal pow(const HighPrecReal& base, unsigned exponent)
{
    HighPrecReal result = HighPrecReal::from_integer(1, base.precision());
    HighPrecReal square = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

HighPrecReal sqrt_integer(const BigInt& n, unsigned precision)
{
    if (n < 0)
        throw std::domain_error("sqrt_integer: negative argument");
    const BigInt scaled = shl(n, 2 * precision);
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    const bool exact = root * root == scaled;
    return HighPrecReal(root, precision, exact ? 0 : 1);
}

HighPrecReal ln2(unsigned precision)
{
    const unsigned w = precision + guard_bits(precision, 0);
    auto [v, e] = ln2_fixed(w);
    (void)e; // far below 2^-precision
    return HighPrecReal(floor_shr(v, w - precision), precision, 2);
}

HighPrecReal log_ratio(const BigInt& num, const BigInt& den, unsigned precision)
{
    if (num <= 0 || den <= 0)
        throw std::domain_error("log_ratio: arguments must be positive");

    // num/den = t * 2^s with t in [1, 2)
    long s = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
    {
        const bool below = s >= 0 ? num < shl(den, static_cast<unsigned long>(s))
                                  : shl(num, static_cast<unsigned long>(-s)) < den;
        if (below)
            --s;
    }

    const std::size_t s_bits = bit_length(BigInt(std::labs(s) + 2));
    const unsigned w = precision + guard_bits(precision, s_bits);
    const unsigned long keep = w + 64;

    // A = num, B = den * 2^s share a magnitude; rescale both by the same 2^e
    // so that each keeps about `keep` bits
    const long e = static_cast<long>(keep) - static_cast<long>(bit_length(num));
    const BigInt a = e >= 0 ? shl(num, static_cast<unsigned long>(e)) : floor_shr(num, static_cast<unsigned long>(-e));
    const long b_shift = s + e;
    const BigInt b = b_shift >= 0 ? shl(den, static_cast<unsigned long>(b_shift))
                                  : floor_shr(den, static_cast<unsigned long>(-b_shift));

    BigInt t; // t * 2^w
    {
        const BigInt scaled = shl(a, w);
        mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());
    }
    const BigInt one = shl(BigInt(1), w);
    BigInt z;
    {
        const BigInt scaled = shl(BigInt(t - one), w);
        const BigInt denom = t + one;
        mpz_tdiv_q(z.get_mpz_t(), scaled.get_mpz_t(), denom.get_mpz_t());
    }

    auto [atanh_v, atanh_e] = atanh_fixed(z, w);
    BigInt total = 2 * atanh_v;
    if (s != 0) {
        auto [l2, l2_e] = ln2_fixed(w);
        total += l2 * s;
        (void)l2_e;
    }
    (void)atanh_e;
    // the accumulated w-bit error is < (|s| + 2) * 2^-(w - 8), far below 2^-precision
    return HighPrecReal(floor_shr(total, w - precision), precision, 2);
}

HighPrecReal log_bigint(const BigInt& x, unsigned precision)
{
    if (x < 1)
        throw std::domain_error("log_bigint: argument must be >= 1");
    if (x == 1)
        return HighPrecReal(0, precision);
    return log_ratio(x, BigInt(1), precision);
}

} // namespace cfseq
