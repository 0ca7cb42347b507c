#include "cfseq/recurrence.hpp"

#include "cfseq/errors.hpp"

#include <stdexcept>
#include <string>

namespace cfseq {

namespace {

// q = num / den, insisting on a zero remainder.
BigInt exact_quotient(const BigInt& num, const BigInt& den, std::size_t index, const char* what)
{
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw InexactDivision(index, what);
    return q;
}

} // namespace

PolyF PolyF::make(std::vector<BigInt> coeffs)
{
    if (coeffs.size() < 2)
        throw RejectedPoly("degree must be at least 1");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] < 0)
            throw RejectedPoly("coefficient c_" + std::to_string(i) + " is negative");
    if (coeffs.front() != 1)
        throw RejectedPoly("constant term must be 1, got " + to_decimal(coeffs.front()));
    if (coeffs.back() == 0)
        throw RejectedPoly("leading coefficient is zero (degree "
                           + std::to_string(coeffs.size() - 1) + " not attained)");
    return PolyF(std::move(coeffs));
}

PolyF make_poly(std::initializer_list<long> coeffs)
{
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return PolyF::make(std::move(v));
}

bool PolyF::is_x_plus_one() const { return coeffs_.size() == 2 && coeffs_[0] == 1 && coeffs_[1] == 1; }

BigInt PolyF::non_leading_sum() const
{
    BigInt s = 0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        s += coeffs_[i];
    return s;
}

BigInt eval_poly(std::span<const BigInt> coeffs, const BigInt& x)
{
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

SeqTable SeqTable::from_terms(PolyF f, std::vector<BigInt> xs)
{
    if (xs.size() < 2)
        throw std::invalid_argument("a sequence table needs at least x_0 and x_1");
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] <= 0)
            throw std::invalid_argument("term x_" + std::to_string(i) + " is not positive");

    std::vector<BigInt> ys, zs;
    ys.reserve(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        ys.push_back(exact_quotient(xs[i + 1], xs[i], i, "y_n = x_{n+1}/x_n"));
    if (ys.size() >= 2)
        zs.reserve(ys.size() - 1);
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
        zs.push_back(exact_quotient(ys[i + 1], ys[i], i, "z_n = y_{n+1}/y_n"));
    return SeqTable(std::move(f), std::move(xs), std::move(ys), std::move(zs));
}

void SeqTable::validate() const
{
    if (xs_.size() < 2 || xs_[0] != 1 || xs_[1] != 1)
        throw Mismatch("initial values", 0, "x_0 = x_1 = 1 required");
    for (std::size_t n = 0; n + 2 < xs_.size(); ++n) {
        const BigInt lhs = xs_[n + 2] * xs_[n];
        const BigInt rhs = xs_[n + 1] * xs_[n + 1] * eval_poly(f_, xs_[n + 1]);
        if (lhs != rhs)
            throw Mismatch("recurrence", n, "x_{n+2} x_n != x_{n+1}^2 F(x_{n+1})");
    }
    for (std::size_t n = 0; n < ys_.size(); ++n)
        if (ys_[n] * xs_[n] != xs_[n + 1])
            throw Mismatch("ratio y", n, "y_n x_n != x_{n+1}");
    for (std::size_t n = 0; n < zs_.size(); ++n)
        if (zs_[n] != eval_poly(f_, xs_[n + 1]) || zs_[n] * ys_[n] != ys_[n + 1])
            throw Mismatch("ratio z", n, "z_n != F(x_{n+1})");
    for (std::size_t n = 1; n + 1 < xs_.size(); ++n)
        if (xs_[n + 1] <= xs_[n])
            throw Mismatch("monotone x", n, "x_{n+1} <= x_n");
    for (std::size_t n = 1; n + 1 < ys_.size(); ++n)
        if (ys_[n + 1] <= ys_[n])
            throw Mismatch("monotone y", n, "y_{n+1} <= y_n");
}

SeqTable generate(const PolyF& f, std::size_t n, std::size_t max_terms)
{
    if (n < 1)
        throw std::invalid_argument("generate: N must be >= 1");
    if (n > max_terms)
        throw std::invalid_argument("generate: N = " + std::to_string(n) + " exceeds the cap of "
                                    + std::to_string(max_terms) + " (raise it explicitly)");

    std::vector<BigInt> xs{BigInt(1), BigInt(1)};
    std::vector<BigInt> f_values; // F(x_1) .. F(x_{n-1})
    xs.reserve(n + 1);
    for (std::size_t k = 2; k <= n; ++k) {
        const BigInt& prev = xs[k - 1];
        f_values.push_back(eval_poly(f, prev));
        const BigInt num = prev * prev * f_values.back();
        BigInt next = exact_quotient(num, xs[k - 2], k, "x_{n+2} = x_{n+1}^2 F(x_{n+1}) / x_n");
        if (next == 0)
            throw SingularityHit(k - 1);
        xs.push_back(std::move(next));
    }

    std::vector<BigInt> ys, zs;
    ys.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        ys.push_back(exact_quotient(xs[i + 1], xs[i], i, "y_n = x_{n+1}/x_n"));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        BigInt z = exact_quotient(ys[i + 1], ys[i], i, "z_n = y_{n+1}/y_n");
        if (z != f_values[i])
            throw Mismatch("z_n = F(x_{n+1})", i, "ratio of ratios disagrees with F");
        zs.push_back(std::move(z));
    }
    return SeqTable(f, std::move(xs), std::move(ys), std::move(zs));
}

GeneralOrbit generate_general(std::span<const BigInt> coeffs, const BigInt& x0, const BigInt& x1, std::size_t n)
{
    if (x0 == 0 || x1 == 0)
        throw std::invalid_argument("generate_general: initial values must be nonzero");
    if (n < 1)
        throw std::invalid_argument("generate_general: N must be >= 1");

    GeneralOrbit orbit;
    orbit.coeffs.assign(coeffs.begin(), coeffs.end());
    orbit.xs = {x0, x1};

    for (std::size_t k = 1;; ++k) {
        const BigInt& cur = orbit.xs[k];
        const BigInt fx = eval_poly(coeffs, cur);
        if (fx == 0) {
            // x_{k+1} = x_k^2 * 0 / x_{k-1}, x_{k+2} = 0 / x_k, x_{k+3} = 0 / 0
            orbit.xs.emplace_back(0);
            orbit.xs.emplace_back(0);
            orbit.status = OrbitStatus::Singular;
            orbit.index = k;
            return orbit;
        }
        if (k == n)
            return orbit;

        const BigInt num = cur * cur * fx;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), orbit.xs[k - 1].get_mpz_t());
        if (r != 0) {
            orbit.status = OrbitStatus::NonIntegral;
            orbit.index = k + 1;
            return orbit;
        }
        orbit.xs.push_back(std::move(q));
    }
}

bool exceeds_five_halves_power(const BigInt& next, const BigInt& cur)
{
    const std::size_t bn = bit_length(next);
    const std::size_t bc = bit_length(cur);
    // bit_length(next^2) is 2bn - 1 or 2bn; bit_length(cur^5) lies in [5(bc - 1) + 1, 5bc]
    if (bc > 0 && 2 * bn - 1 > 5 * bc)
        return true;
    if (bc > 0 && 2 * bn < 5 * (bc - 1) + 1)
        return false;
    return next * next > pow(cur, 5);
}

std::vector<GrowthRecord> growth_metrics(const SeqTable& t, unsigned precision)
{
    if (t.xs().size() < 4)
        throw InsufficientTerms("growth_metrics needs x_0..x_3 at least");
    std::vector<GrowthRecord> out;
    HighPrecReal log_cur = log_bigint(t.x(2), precision);
    for (std::size_t n = 2; n + 1 < t.xs().size(); ++n) {
        HighPrecReal log_next = log_bigint(t.x(n + 1), precision);
        GrowthRecord rec;
        rec.n = n;
        rec.log_ratio = log_next / log_cur;
        rec.exceeds_five_halves = exceeds_five_halves_power(t.x(n + 1), t.x(n));
        out.push_back(std::move(rec));
        log_cur = std::move(log_next);
    }
    return out;
}

} // namespace cfseq
