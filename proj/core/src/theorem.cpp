#include "cfseq/theorem.hpp"

#include "cfseq/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfseq {

namespace {

void require_terms(const SeqTable& t, std::size_t depth, const char* who)
{
    if (t.last_index() < depth)
        throw InsufficientTerms(std::string(who) + ": table ends at x_" + std::to_string(t.last_index())
                                + ", depth " + std::to_string(depth) + " needs x_" + std::to_string(depth));
}

std::size_t first_difference(std::span<const BigInt> a, std::span<const BigInt> b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return i;
    return n;
}

} // namespace

std::vector<BigInt> predicted_coeffs(const SeqTable& t, std::size_t depth)
{
    if (depth < 1)
        throw std::invalid_argument("predicted_coeffs: depth must be >= 1");
    require_terms(t, depth, "predicted_coeffs");

    const PolyF& f = t.poly();
    std::vector<BigInt> a;
    a.reserve(2 * depth - 1);
    for (std::size_t n = 0; n < depth; ++n) {
        a.push_back(t.x(n));
        if (n + 1 == depth)
            break;
        const BigInt& next = t.x(n + 1);
        BigInt q, r;
        const BigInt shifted = eval_poly(f, next) - 1;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), shifted.get_mpz_t(), t.x(n).get_mpz_t());
        if (r != 0)
            throw InexactDivision(2 * n + 1, "(F(x_{n+1}) - 1) / x_n");
        if (q <= 0)
            throw Mismatch("odd coefficient positivity", 2 * n + 1, "a_{2n+1} = " + to_decimal(q));
        if (q != t.y(n) * eval_cofactor(f, next))
            throw Mismatch("odd coefficient cofactor form", 2 * n + 1, "a_{2n+1} != y_n G(x_{n+1})");
        a.push_back(std::move(q));
    }
    return a;
}

std::vector<Rational> partial_sums(const SeqTable& t, std::size_t depth)
{
    require_terms(t, depth, "partial_sums");
    std::vector<Rational> sums;
    sums.reserve(depth);
    // S_j = A_j / x_j with A_1 = 1, A_{j+1} = A_j y_j + 1, since x_j divides x_{j+1}
    BigInt numer = 0;
    for (std::size_t j = 1; j <= depth; ++j) {
        numer = (j == 1) ? BigInt(1) : BigInt(numer * t.y(j - 1) + 1);
        sums.emplace_back(numer, t.x(j));
    }
    return sums;
}

Rational partial_sum(const SeqTable& t, std::size_t depth)
{
    if (depth == 0)
        return Rational();
    return partial_sums(t, depth).back();
}

const char* to_string(ShallitResult r)
{
    switch (r) {
    case ShallitResult::Pass:
        return "pass";
    case ShallitResult::Fail:
        return "fail";
    case ShallitResult::NotApplicable:
        return "not-applicable";
    }
    return "?";
}

bool TheoremReport::all_passed() const
{
    const auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    return match && all(q_odd_ok) && all(q_even_ok) && all(even_convergent_ok) && engel_ok
           && shallit != ShallitResult::Fail;
}

TheoremReport verify_theorem1(const SeqTable& t, std::size_t depth)
{
    if (depth < 2)
        throw std::invalid_argument("verify_theorem1: depth must be >= 2");
    require_terms(t, depth, "verify_theorem1");

    TheoremReport rep{.poly = t.poly(), .depth = depth};
    const std::vector<Rational> sums = partial_sums(t, depth);
    rep.partial_sum = sums.back();
    rep.predicted_a = predicted_coeffs(t, depth);
    rep.expanded_a = cf_expand(rep.partial_sum).a;

    rep.match = cf_equivalent(rep.predicted_a, rep.expanded_a);
    if (!rep.match) {
        const auto canon_p = canonical_quotients(rep.predicted_a);
        const auto canon_e = canonical_quotients(rep.expanded_a);
        throw Mismatch("interlaced expansion of S_N", first_difference(canon_p, canon_e),
                       "Euclidean expansion of S_" + std::to_string(depth) + " differs from x_n / a_{2n+1} pattern");
    }

    const CFExpansion cf = convergents(rep.predicted_a);
    for (std::size_t n = 0; n < depth; ++n) {
        // q_{-1} = 0 is the seed
        const BigInt q_odd = (n == 0) ? BigInt(0) : cf.q[2 * n - 1];
        const bool odd_ok = q_odd == t.y(n) - 1;
        const bool even_ok = cf.q[2 * n] == t.x(n + 1);
        const bool conv_ok = cf.convergent(2 * n) == sums[n];
        rep.q_odd_ok.push_back(odd_ok);
        rep.q_even_ok.push_back(even_ok);
        rep.even_convergent_ok.push_back(conv_ok);
        if (!odd_ok)
            throw Mismatch("q_{2n-1} = y_n - 1", n, "q = " + to_decimal(q_odd));
        if (!even_ok)
            throw Mismatch("q_{2n} = x_{n+1}", n, "q = " + to_decimal(cf.q[2 * n]));
        if (!conv_ok)
            throw Mismatch("p_{2n}/q_{2n} = S_{n+1}", n, "even convergent is not the partial sum");
    }

    rep.engel_ok = verify_engel(t, depth);
    if (t.poly().is_x_plus_one())
        rep.shallit = verify_shallit(t.poly(), shifted_sum_coeffs(t, 2 * depth - 1));
    return rep;
}

TheoremReport verify_theorem1(const PolyF& f, std::size_t depth)
{
    return verify_theorem1(generate(f, depth, std::max(depth, kDefaultMaxTerms)), depth);
}

bool verify_engel(const SeqTable& t, std::size_t depth)
{
    if (depth < 2)
        throw std::invalid_argument("verify_engel: depth must be >= 2");
    require_terms(t, depth, "verify_engel");

    for (std::size_t n = 1; n < depth; ++n)
        if (t.y(n) < 2)
            return false;

    // right-hand side from the ratios alone; left-hand side from the x terms
    Rational engel;
    BigInt product = 1;
    for (std::size_t j = 1; j < depth; ++j) {
        product *= t.y(j);
        engel += Rational(BigInt(1), product);
    }
    Rational direct;
    for (std::size_t j = 1; j <= depth; ++j)
        direct += Rational(BigInt(1), t.x(j));
    return direct - Rational(BigInt(1)) == engel;
}

std::vector<BigInt> shifted_sum_coeffs(const SeqTable& t, std::size_t count)
{
    if (count == 0)
        return {};
    const std::size_t depth = count / 2 + 1;
    std::vector<BigInt> a = predicted_coeffs(t, depth);
    a.resize(count);
    a[0] += 1;
    return a;
}

ShallitResult verify_shallit(const PolyF& f, std::span<const BigInt> a)
{
    if (!f.is_x_plus_one())
        return ShallitResult::NotApplicable;
    for (std::size_t n = 2; 2 * n < a.size(); ++n)
        if (a[2 * n] != a[2 * n - 1] * a[2 * n - 2])
            return ShallitResult::Fail;
    for (std::size_t n = 1; 2 * n + 1 < a.size(); ++n)
        if (a[2 * n + 1] != a[2 * n - 1] * (a[2 * n] + 1))
            return ShallitResult::Fail;
    return ShallitResult::Pass;
}

} // namespace cfseq
