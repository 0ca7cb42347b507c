#pragma once

// Test-only oracles: MPFR for real numbers, naive rational iteration for sequences.

#include "cfseq/bigint.hpp"
#include "cfseq/high_prec.hpp"
#include "cfseq/rational.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cfseq::testing {

class Mpfr
{
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Mpfr(const Mpfr& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr& operator=(const Mpfr& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    static Mpfr from_z(const BigInt& z, mpfr_prec_t prec)
    {
        Mpfr r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Mpfr from_q(const mpq_class& q, mpfr_prec_t prec)
    {
        Mpfr r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Mpfr from_string(const char* s, mpfr_prec_t prec)
    {
        Mpfr r(prec);
        mpfr_set_str(r.v_, s, 10, MPFR_RNDN);
        return r;
    }
    // exact: mantissa * 2^-P
    static Mpfr from_high_prec(const HighPrecReal& h, mpfr_prec_t prec)
    {
        Mpfr r(prec);
        mpfr_set_z_2exp(r.v_, h.mantissa().get_mpz_t(), -static_cast<long>(h.precision()), MPFR_RNDN);
        return r;
    }

    Mpfr log() const { return unary(mpfr_log); }
    Mpfr sqrt() const { return unary(mpfr_sqrt); }
    Mpfr abs() const { return unary(mpfr_abs); }
    Mpfr log1p() const { return unary(mpfr_log1p); }
    Mpfr pow_ui(unsigned long e) const
    {
        Mpfr r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    friend Mpfr operator+(const Mpfr& a, const Mpfr& b) { return binary(mpfr_add, a, b); }
    friend Mpfr operator-(const Mpfr& a, const Mpfr& b) { return binary(mpfr_sub, a, b); }
    friend Mpfr operator*(const Mpfr& a, const Mpfr& b) { return binary(mpfr_mul, a, b); }
    friend Mpfr operator/(const Mpfr& a, const Mpfr& b) { return binary(mpfr_div, a, b); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2 |v|, or a very negative number for zero
    double log2_abs() const
    {
        if (mpfr_zero_p(v_))
            return -1e18;
        long e = 0;
        const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log2(std::fabs(m)) + static_cast<double>(e);
    }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }

private:
    Mpfr unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const
    {
        Mpfr r(prec());
        fn(r.v_, v_, MPFR_RNDN);
        return r;
    }
    static Mpfr binary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), const Mpfr& a, const Mpfr& b)
    {
        Mpfr r(std::max(a.prec(), b.prec()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

// log2 |h - m|: how far the fixed-point value sits from the oracle.
inline double log2_distance(const HighPrecReal& h, const Mpfr& oracle)
{
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(oracle.prec(), h.precision() + 64 + bit_length(h.mantissa()));
    return (Mpfr::from_high_prec(h, prec) - oracle).abs().log2_abs();
}

inline BigInt random_bigint(std::mt19937_64& rng, const BigInt& upper_inclusive)
{
    // rejection sampling over 64-bit limbs
    const std::size_t bits = bit_length(upper_inclusive);
    for (;;) {
        BigInt v = 0;
        for (std::size_t got = 0; got < bits; got += 64) {
            v <<= 64;
            const std::uint64_t limb = rng();
            v += BigInt(static_cast<unsigned long>(limb >> 32)) * BigInt(1ul << 32) + BigInt(static_cast<unsigned long>(limb & 0xffffffffu));
        }
        mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
        if (v <= upper_inclusive)
            return v;
    }
}

// x_{n+2} = x_{n+1}^2 F(x_{n+1}) / x_n evaluated in the rationals, with no
// integrality assumed; the caller checks the denominators.
inline std::vector<mpq_class> naive_orbit(const std::vector<long>& coeffs, std::size_t n)
{
    std::vector<mpq_class> xs{mpq_class(1), mpq_class(1)};
    while (xs.size() < n + 1) {
        const mpq_class& b = xs.back();
        mpq_class f = 0, power = 1;
        for (long c : coeffs) {
            f += c * power;
            power *= b;
        }
        mpq_class next = b * b * f / xs[xs.size() - 2];
        next.canonicalize();
        xs.push_back(next);
    }
    return xs;
}

// Independent continued-fraction expansion by repeated reciprocals (x -> 1/(x - floor x)).
inline std::vector<BigInt> naive_cf(mpq_class x)
{
    std::vector<BigInt> a;
    for (;;) {
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        a.push_back(fl);
        mpq_class frac = x - mpq_class(fl);
        if (frac == 0)
            return a;
        x = 1 / frac;
        x.canonicalize();
    }
}

inline std::vector<BigInt> big(std::initializer_list<const char*> values)
{
    std::vector<BigInt> out;
    for (const char* v : values)
        out.emplace_back(v);
    return out;
}

} // namespace cfseq::testing
