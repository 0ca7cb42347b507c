#include "cfseq/continued_fraction.hpp"
#include "cfseq/diophantine.hpp"
#include "cfseq/errors.hpp"
#include "cfseq/theorem.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace cfseq;
using cfseq::testing::Mpfr;

namespace {

const std::vector<std::vector<long>> kMatrix = {
    {1, 1}, {1, 2}, {1, 0, 1}, {1, 1, 1}, {1, 1, 0, 1},
};

PolyF poly(const std::vector<long>& c)
{
    return make_poly(std::vector<BigInt>(c.begin(), c.end()));
}

const Rational kTenth(BigInt(1), BigInt(10));

} // namespace

TEST(TailBracket, EnclosesLongerSums)
{
    for (const auto& c : kMatrix) {
        const SeqTable t = generate(poly(c), c.size() == 4 ? 8 : 10);
        const std::size_t last = t.last_index();
        for (std::size_t from = 2; from + 2 < last; ++from) {
            const TailBracket b = tail_bracket(t, from, last - 1);
            EXPECT_LT(b.lo, b.hi);
            // the partial sum through the table's end lies inside
            Rational longer = b.lo + Rational(BigInt(1), t.x(last));
            EXPECT_LT(b.lo, longer);
            EXPECT_LT(longer, b.hi);
            // shorter horizon gives a wider bracket containing the longer one
            const TailBracket wide = tail_bracket(t, from, last - 2);
            EXPECT_LE(wide.lo, b.lo);
            EXPECT_GE(wide.hi, b.hi);
        }
        EXPECT_THROW(tail_bracket(t, 2, last), InsufficientTerms);
        EXPECT_THROW(tail_bracket(t, 0, 3), std::invalid_argument);
    }
}

TEST(TailBracket, ErrorEqualsTailOfConvergent)
{
    // S_inf - p_{2n}/q_{2n} = sum_{j >= n+2} 1/x_j, so the record bracket is a tail bracket
    const SeqTable t = generate(make_poly({1, 1}), 12);
    for (std::size_t n = 1; n <= 6; ++n) {
        const ApproxRecord r = roth_exponent(t, n, n + 4, kTenth);
        const TailBracket b = tail_bracket(t, n + 2, n + 4);
        EXPECT_EQ(r.err_lo, b.lo);
        EXPECT_EQ(r.err_hi, b.hi);
        EXPECT_EQ(r.q, t.x(n + 1));
        const CFExpansion cf = convergents(predicted_coeffs(t, n + 1));
        EXPECT_EQ(cf.q[2 * n], r.q);
        EXPECT_EQ(cf.convergent(2 * n), partial_sum(t, n + 1));
    }
}

TEST(Roth, BracketInvariantsAcrossMatrix)
{
    for (const auto& c : kMatrix) {
        const std::size_t n_last = c.size() == 4 ? 3 : 5;
        const SeqTable t = generate(poly(c), n_last + 6);
        for (std::size_t n = 1; n <= n_last; ++n) {
            const ApproxRecord r = roth_exponent(t, n, n + 4, kTenth);
            EXPECT_GT(r.err_lo.sign(), 0);
            EXPECT_LT(r.err_lo, r.err_hi);
            EXPECT_FALSE(definitely_greater(r.E_lo, r.E_hi));
            // relative bracket width below 2^-40
            const Rational rel = (r.err_hi - r.err_lo) / r.err_lo;
            EXPECT_LT(rel, Rational(BigInt(1), BigInt(1) << 40)) << "n = " << n;
            // a longer horizon nests
            const ApproxRecord s = roth_exponent(t, n, n + 5, kTenth);
            EXPECT_GE(s.err_lo, r.err_lo);
            EXPECT_LE(s.err_hi, r.err_hi);
            EXPECT_FALSE(definitely_less(s.E_lo, r.E_lo.lower()));
            EXPECT_FALSE(definitely_greater(s.E_hi, r.E_hi.upper()));
        }
    }
}

// Oracle: E computed in MPFR from a longer direct tail sum must fall inside the bracket.
TEST(Roth, ExponentMatchesOracle)
{
    const SeqTable t = generate(make_poly({1, 1}), 13);
    for (std::size_t n = 2; n <= 8; ++n) {
        const ApproxRecord r = roth_exponent(t, n, n + 4, kTenth);
        const mpfr_prec_t prec = 128 + bit_length(t.x(13));
        Mpfr tail = Mpfr::from_z(0, prec);
        for (std::size_t j = n + 2; j <= 13; ++j)
            tail = tail + Mpfr::from_z(1, prec) / Mpfr::from_z(t.x(j), prec);
        const Mpfr e = (Mpfr::from_z(1, prec) / tail).log() / Mpfr::from_z(r.q, prec).log();
        const double ev = e.to_double();
        EXPECT_GE(ev, r.E_lo.lower().to_double() - 1e-12) << "n = " << n;
        EXPECT_LE(ev, r.E_hi.upper().to_double() + 1e-12) << "n = " << n;
    }
}

TEST(Roth, XPlusOneExponentTrend)
{
    const HighPrecReal two_and_half = HighPrecReal::from_ratio(5, 2, 256);
    const SeqTable t = generate(make_poly({1, 1}), 15);
    for (std::size_t n = 3; n <= 10; ++n) {
        const ApproxRecord r = roth_exponent(t, n, n + 4, kTenth);
        EXPECT_TRUE(definitely_greater(r.E_lo, two_and_half)) << "n = " << n;
        EXPECT_TRUE(r.roth_pass);
    }
}

TEST(Roth, DeltaGuard)
{
    const HighPrecReal l1 = HighPrecReal::from_ratio(BigInt("2618033988749895"), BigInt("1000000000000000"), 128);
    EXPECT_NO_THROW(check_delta(l1, kTenth));
    EXPECT_NO_THROW(check_delta(l1, Rational(BigInt(56), BigInt(100))));
    EXPECT_THROW(check_delta(l1, Rational(BigInt(57), BigInt(100))), ConfigRejected);
    EXPECT_THROW(check_delta(l1, Rational(BigInt(0))), ConfigRejected);
    EXPECT_THROW(check_delta(l1, Rational(BigInt(-1), BigInt(10))), ConfigRejected);
}

TEST(Roth, RejectsShortHorizon)
{
    const SeqTable t = generate(make_poly({1, 1}), 10);
    EXPECT_THROW(roth_exponent(t, 3, 6, kTenth), std::invalid_argument);
    EXPECT_THROW(roth_exponent(t, 0, 5, kTenth), std::invalid_argument);
}

TEST(Evidence, ReportForXPlusOne)
{
    const EvidenceReport r = transcendence_evidence(make_poly({1, 1}), 3, 8);
    EXPECT_TRUE(r.growth_ok);
    EXPECT_TRUE(r.all_roth_pass);
    ASSERT_EQ(r.records.size(), 6u);
    EXPECT_EQ(r.records.front().n, 3u);
    EXPECT_EQ(r.onset_index, 3u);
    EXPECT_NE(r.interpretation.find("not a proof"), std::string::npos);
    // closer to lambda at the end of the range
    const HighPrecReal gap = (r.records.back().E_lo - r.lambda).abs();
    EXPECT_TRUE(definitely_less(gap, HighPrecReal::from_ratio(5, 100, 256)));
}

TEST(Evidence, ConfigValidation)
{
    RothConfig cfg;
    cfg.delta = Rational(BigInt(3), BigInt(5));
    EXPECT_THROW(transcendence_evidence(make_poly({1, 1}), 3, 5, cfg), ConfigRejected);
    cfg = RothConfig{};
    cfg.horizon_offset = 3;
    EXPECT_THROW(transcendence_evidence(make_poly({1, 1}), 3, 5, cfg), std::invalid_argument);
    EXPECT_THROW(transcendence_evidence(make_poly({1, 1}), 5, 3), std::invalid_argument);
}

// The expansion of S_N keeps growing: no finite list represents the limit.
TEST(Irrationality, ExpansionLengthensWithN)
{
    for (const auto& c : kMatrix) {
        const std::size_t top = c.size() == 4 ? 9 : 11;
        const SeqTable t = generate(poly(c), top);
        std::size_t prev = 0;
        for (std::size_t n = 2; n <= top; ++n) {
            const std::size_t len = cf_expand(partial_sum(t, n)).size();
            EXPECT_GT(len, prev) << "N = " << n;
            prev = len;
        }
    }
}
