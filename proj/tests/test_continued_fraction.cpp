#include "cfseq/continued_fraction.hpp"
#include "cfseq/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace cfseq;
using cfseq::testing::big;
using cfseq::testing::naive_cf;
using cfseq::testing::random_bigint;

namespace {

Rational random_rational(std::mt19937_64& rng, const BigInt& bound, bool allow_negative)
{
    BigInt num = random_bigint(rng, bound);
    const BigInt den = random_bigint(rng, bound) + 1;
    if (allow_negative && (rng() & 1))
        num = -num;
    return Rational(num, den);
}

void expect_same_table(const CFExpansion& a, const CFExpansion& b)
{
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.p, b.p);
    EXPECT_EQ(a.q, b.q);
}

} // namespace

TEST(CFExpand, SmallKnownValues)
{
    EXPECT_EQ(cf_expand(Rational(BigInt(415), BigInt(93))).a, big({"4", "2", "6", "7"}));
    EXPECT_EQ(cf_expand(Rational(BigInt(-7), BigInt(3))).a, big({"-3", "1", "2"}));
    EXPECT_EQ(cf_expand(Rational(BigInt(5))).a, big({"5"}));
    EXPECT_EQ(cf_expand(Rational(BigInt(0))).a, big({"0"}));
    EXPECT_EQ(cf_expand(Rational(BigInt(1), BigInt(2))).a, big({"0", "2"}));
}

// Property: 1000 random rationals up to 1e30, Euclid against repeated reciprocals,
// convergent value equal to the input, both identities, matrix route agreeing.
TEST(CFExpand, RandomRationalsAgainstOracle)
{
    std::mt19937_64 rng(1357);
    const BigInt bound("1000000000000000000000000000000");
    for (int trial = 0; trial < 1000; ++trial) {
        const Rational r = random_rational(rng, bound, trial % 2 == 0);
        const CFExpansion cf = cf_expand(r);
        ASSERT_EQ(cf.a, naive_cf(r.mpq())) << r.to_string();
        EXPECT_EQ(cf.value(), r);
        for (std::size_t k = 1; k < cf.size(); ++k)
            EXPECT_GE(cf.a[k], 1);
        if (cf.size() > 1)
            EXPECT_GE(cf.a.back(), 2);
        EXPECT_FALSE(find_determinant_violation(cf));
        EXPECT_FALSE(find_second_identity_violation(cf));
        expect_same_table(cf, convergents_by_matrix(cf.a));
    }
}

TEST(Convergents, IdentitiesHoldOnRandomLists)
{
    std::mt19937_64 rng(2468);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> a;
        a.push_back(random_bigint(rng, BigInt(50)) - 25);
        const int len = 1 + static_cast<int>(rng() % 40);
        for (int i = 0; i < len; ++i)
            a.push_back(random_bigint(rng, BigInt(1) << (rng() % 80)) + 1);
        const CFExpansion cf = convergents(a);
        expect_same_table(cf, convergents_by_matrix(a));
        // determinant identity, checked directly
        for (std::size_t k = 1; k < cf.size(); ++k) {
            const BigInt det = cf.p[k] * cf.q[k - 1] - cf.p[k - 1] * cf.q[k];
            EXPECT_EQ(det, (k % 2 == 1) ? 1 : -1);
        }
        for (std::size_t k = 2; k < cf.size(); ++k) {
            const BigInt d2 = cf.p[k] * cf.q[k - 2] - cf.p[k - 2] * cf.q[k];
            EXPECT_EQ(d2, (k % 2 == 0) ? BigInt(a[k]) : BigInt(-a[k]));
        }
        // q is increasing from q_1
        for (std::size_t k = 2; k < cf.size(); ++k)
            EXPECT_GT(cf.q[k], cf.q[k - 1]);
        EXPECT_TRUE(cf_equivalent(a, cf_expand(cf.value()).a));
    }
}

TEST(Convergents, RejectsBadInput)
{
    EXPECT_THROW(convergents(big({"1", "0", "2"})), InvalidQuotient);
    EXPECT_THROW(convergents(big({"1", "-3"})), InvalidQuotient);
    EXPECT_THROW(convergents(std::vector<BigInt>{}), std::invalid_argument);
    EXPECT_NO_THROW(convergents(big({"-4"})));
}

TEST(Convergents, SeedsAndFirstTerms)
{
    const CFExpansion cf = convergents(big({"1", "1", "1", "2", "2"}));
    EXPECT_EQ(cf.p, big({"1", "2", "3", "8", "19"}));
    EXPECT_EQ(cf.q, big({"1", "1", "2", "5", "12"}));
    EXPECT_EQ(cf.value(), Rational(BigInt(19), BigInt(12)));
}

TEST(Canonical, TrailingOneFolds)
{
    EXPECT_EQ(canonical_quotients(big({"1", "1", "1"})), big({"1", "2"}));
    EXPECT_EQ(canonical_quotients(big({"1", "2"})), big({"1", "2"}));
    EXPECT_EQ(canonical_quotients(big({"1"})), big({"1"}));
    EXPECT_TRUE(cf_equivalent(big({"1", "2"}), big({"1", "1", "1"})));
    EXPECT_FALSE(cf_equivalent(big({"1", "2"}), big({"1", "3"})));
}

TEST(CFValue, MatchesExactValue)
{
    const auto a = big({"2", "1", "1", "2", "2", "6", "12", "78"});
    const auto v = cf_value(a, 128);
    const Rational exact = convergents(a).value();
    const mpq_class diff = v.to_rational() - exact.mpq();
    EXPECT_LE(abs(diff), mpq_class(mpz_class(2), mpz_class(1) << 128));
    EXPECT_THROW(cf_value(a, 32), std::invalid_argument);
}
