#include "cfseq/continued_fraction.hpp"

#include "cfseq/errors.hpp"

#include <stdexcept>

namespace cfseq {

namespace {

void check_quotients(std::span<const BigInt> a)
{
    if (a.empty())
        throw std::invalid_argument("continued fraction needs at least one quotient");
    for (std::size_t k = 1; k < a.size(); ++k)
        if (a[k] < 1)
            throw InvalidQuotient(k);
}

// p_{k}, q_{k} including the seeds p_{-1} = 1, q_{-1} = 0 (k = -1) and p_{-2} = 0, q_{-2} = 1.
const BigInt& p_at(const CFExpansion& cf, long k)
{
    static const BigInt zero = 0, one = 1;
    if (k == -1)
        return one;
    if (k == -2)
        return zero;
    return cf.p[static_cast<std::size_t>(k)];
}

const BigInt& q_at(const CFExpansion& cf, long k)
{
    static const BigInt zero = 0, one = 1;
    if (k == -1)
        return zero;
    if (k == -2)
        return one;
    return cf.q[static_cast<std::size_t>(k)];
}

} // namespace

CFExpansion cf_expand(const Rational& r)
{
    std::vector<BigInt> a;
    BigInt num = r.num();
    BigInt den = r.den();
    BigInt q, rem;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        a.push_back(q);
        if (rem == 0)
            break;
        num.swap(den);
        den.swap(rem);
    }
    return convergents(a);
}

CFExpansion convergents(std::span<const BigInt> a)
{
    check_quotients(a);
    CFExpansion cf;
    cf.a.assign(a.begin(), a.end());
    cf.p.reserve(a.size());
    cf.q.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const long i = static_cast<long>(k);
        cf.p.push_back(a[k] * p_at(cf, i - 1) + p_at(cf, i - 2));
        cf.q.push_back(a[k] * q_at(cf, i - 1) + q_at(cf, i - 2));
    }
    if (auto bad = find_determinant_violation(cf))
        throw Mismatch("determinant identity", *bad, "p_n q_{n-1} - p_{n-1} q_n != (-1)^{n+1}");
    if (auto bad = find_second_identity_violation(cf))
        throw Mismatch("second convergent identity", *bad, "p_n q_{n-2} - p_{n-2} q_n != (-1)^n a_n");
    return cf;
}

CFExpansion convergents_by_matrix(std::span<const BigInt> a)
{
    check_quotients(a);
    CFExpansion cf;
    cf.a.assign(a.begin(), a.end());
    // [[m00, m01], [m10, m11]], starting from the identity
    BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (const BigInt& ak : a) {
        BigInt n00 = m00 * ak + m01;
        BigInt n10 = m10 * ak + m11;
        m01 = std::move(m00);
        m11 = std::move(m10);
        m00 = std::move(n00);
        m10 = std::move(n10);
        cf.p.push_back(m00);
        cf.q.push_back(m10);
    }
    return cf;
}

std::optional<std::size_t> find_determinant_violation(const CFExpansion& cf)
{
    for (std::size_t k = 0; k < cf.size(); ++k) {
        const long i = static_cast<long>(k);
        const BigInt det = p_at(cf, i) * q_at(cf, i - 1) - p_at(cf, i - 1) * q_at(cf, i);
        const int expected = (k % 2 == 1) ? 1 : -1;
        if (det != expected)
            return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_second_identity_violation(const CFExpansion& cf)
{
    for (std::size_t k = 1; k < cf.size(); ++k) {
        const long i = static_cast<long>(k);
        const BigInt lhs = p_at(cf, i) * q_at(cf, i - 2) - p_at(cf, i - 2) * q_at(cf, i);
        const BigInt rhs = (k % 2 == 0) ? cf.a[k] : BigInt(-cf.a[k]);
        if (lhs != rhs)
            return k;
    }
    return std::nullopt;
}

std::vector<BigInt> canonical_quotients(std::span<const BigInt> a)
{
    std::vector<BigInt> out(a.begin(), a.end());
    if (out.size() > 1 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return out;
}

bool cf_equivalent(std::span<const BigInt> a, std::span<const BigInt> b)
{
    check_quotients(a);
    check_quotients(b);
    return canonical_quotients(a) == canonical_quotients(b);
}

HighPrecReal cf_value(std::span<const BigInt> a, unsigned precision)
{
    if (precision < 64)
        throw std::invalid_argument("cf_value: precision must be at least 64 bits");
    check_quotients(a);
    BigInt p_prev = 1, p = a[0];
    BigInt q_prev = 0, q = 1;
    for (std::size_t k = 1; k < a.size(); ++k) {
        BigInt p_next = a[k] * p + p_prev;
        BigInt q_next = a[k] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return HighPrecReal::from_ratio(p, q, precision);
}

} // namespace cfseq
