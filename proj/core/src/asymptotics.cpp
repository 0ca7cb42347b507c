#include "cfseq/asymptotics.hpp"

#include "cfseq/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfseq {

namespace {

constexpr long kFormulaTolerancePow2 = -128;
constexpr unsigned kMaxEscalatedPrecision = 1u << 14;

struct RootPowers
{
    HighPrecReal lambda;
    HighPrecReal inverse; // 1/lambda = (d + 2) - lambda
    HighPrecReal gap;     // lambda - 1/lambda
    std::vector<HighPrecReal> lambda_pow;
    std::vector<HighPrecReal> inverse_pow;
};

RootPowers root_powers(std::size_t degree, std::size_t max_power, unsigned precision)
{
    RootPowers r;
    r.lambda = char_root(degree, precision);
    r.inverse = HighPrecReal::from_integer(BigInt(static_cast<unsigned long>(degree + 2)), precision) - r.lambda;
    r.gap = r.lambda - r.inverse;
    r.lambda_pow.push_back(HighPrecReal::from_integer(1, precision));
    r.inverse_pow.push_back(HighPrecReal::from_integer(1, precision));
    for (std::size_t j = 1; j <= max_power; ++j) {
        r.lambda_pow.push_back(r.lambda_pow.back() * r.lambda);
        r.inverse_pow.push_back(r.inverse_pow.back() * r.inverse);
    }
    return r;
}

// ln(c)/d = ln c^{1/d}
HighPrecReal log_c_root(const PolyF& f, unsigned precision)
{
    return log_bigint(f.leading(), precision) / BigInt(static_cast<unsigned long>(f.degree()));
}

long magnitude_log2(const HighPrecReal& v)
{
    const BigInt top = (v.mantissa() < 0 ? BigInt(-v.mantissa()) : v.mantissa()) + v.error_ulps();
    return static_cast<long>(bit_length(top)) - static_cast<long>(v.precision());
}

// alphas[k - 1] = alpha_k at `precision`, for k = 1 .. n - 1 at least
ExactFormulaCheck exact_formula_at(const SeqTable& t, std::size_t n, unsigned precision,
                                   const std::vector<HighPrecReal>& alphas)
{
    const PolyF& f = t.poly();
    const RootPowers r = root_powers(f.degree(), n, precision);
    const HighPrecReal one = HighPrecReal::from_integer(1, precision);

    const HighPrecReal closed = ((one - r.inverse) * r.lambda_pow[n] - (one - r.lambda) * r.inverse_pow[n]) / r.gap - one;
    HighPrecReal formula = closed * log_c_root(f, precision);
    for (std::size_t k = 1; k < n; ++k) {
        const HighPrecReal weight = (r.lambda_pow[n - k] - r.inverse_pow[n - k]) / r.gap;
        formula = formula + weight * alphas[k - 1];
    }

    ExactFormulaCheck check;
    check.n = n;
    check.precision = precision;
    check.log_term = log_bigint(t.x(n), precision);
    check.residual = (formula - check.log_term).abs();
    check.formula = std::move(formula);
    check.error_log2 = magnitude_log2(check.residual);
    return check;
}

} // namespace

HighPrecReal char_root(std::size_t degree, unsigned precision)
{
    if (degree < 1)
        throw std::invalid_argument("char_root: degree must be >= 1");
    const unsigned work = precision + 16;
    const BigInt d = static_cast<unsigned long>(degree);
    const HighPrecReal root = sqrt_integer(d * (d + 4), work);
    const HighPrecReal lambda = ((HighPrecReal::from_integer(d + 2, work) + root) / BigInt(2)).with_precision(precision);
    if (!definitely_greater(lambda, HighPrecReal::from_integer(2, precision)))
        throw std::logic_error("char_root: root not above 2");
    return lambda;
}

HighPrecReal alpha_k(const SeqTable& t, std::size_t k, unsigned precision)
{
    if (k < 1 || k > t.last_index())
        throw std::out_of_range("alpha_k: index " + std::to_string(k) + " outside 1.." + std::to_string(t.last_index()));
    const PolyF& f = t.poly();
    const BigInt& x = t.x(k);
    const BigInt leading_term = f.leading() * pow(x, static_cast<unsigned long>(f.degree()));
    return log_ratio(eval_poly(f, x), leading_term, precision);
}

ExactFormulaCheck verify_exact_formula(const SeqTable& t, std::size_t n, unsigned precision)
{
    if (n < 2 || n > t.last_index())
        throw std::out_of_range("verify_exact_formula: n = " + std::to_string(n) + " outside 2.."
                                + std::to_string(t.last_index()));
    for (unsigned p = precision;; p *= 2) {
        std::vector<HighPrecReal> alphas;
        for (std::size_t k = 1; k < n; ++k)
            alphas.push_back(alpha_k(t, k, p));
        ExactFormulaCheck check = exact_formula_at(t, n, p, alphas);
        if (check.residual.error_below_pow2(kFormulaTolerancePow2) || p >= kMaxEscalatedPrecision)
            return check;
    }
}

AsymptoticReport estimate_C(const SeqTable& t, std::optional<std::size_t> truncation, unsigned precision)
{
    const std::size_t available = t.last_index();
    const std::size_t k_max = truncation.value_or(available);
    if (k_max < 1)
        throw std::invalid_argument("estimate_C: truncation must be >= 1");
    if (k_max > available)
        throw InsufficientTerms("estimate_C: K = " + std::to_string(k_max) + " but only alpha_1..alpha_"
                                + std::to_string(available) + " are available");

    const PolyF& f = t.poly();
    AsymptoticReport rep{.poly = f, .precision = precision};
    rep.truncation_k = k_max;
    for (std::size_t k = 1; k <= available; ++k)
        rep.alpha.push_back(alpha_k(t, k, precision));

    // the geometric tail envelope needs alpha_k non-increasing from K on
    for (std::size_t k = k_max; k < available; ++k)
        if (definitely_greater(rep.alpha[k], rep.alpha[k - 1]))
            throw Mismatch("alpha decreasing past K", k + 1, "alpha_{k} > alpha_{k-1}");

    const RootPowers r = root_powers(f.degree(), std::max(k_max, available), precision);
    rep.lambda = r.lambda;
    const HighPrecReal one = HighPrecReal::from_integer(1, precision);

    HighPrecReal series = HighPrecReal::from_integer(0, precision);
    for (std::size_t k = 1; k <= k_max; ++k)
        series = series + r.inverse_pow[k] * rep.alpha[k - 1];
    rep.C = (one - r.inverse) / r.gap * log_c_root(f, precision) + series / r.gap;

    rep.tail_bound = (r.inverse_pow[k_max] * rep.alpha[k_max - 1] * r.lambda / (r.lambda - one)).upper();

    const HighPrecReal log_c_d = log_c_root(f, precision);
    for (std::size_t n = 2; n <= available; ++n) {
        TermPrediction p;
        p.n = n;
        p.predicted_log = rep.C * r.lambda_pow[n] - log_c_d;
        p.actual_log = log_bigint(t.x(n), precision);
        p.relative_error = std::fabs(((p.predicted_log - p.actual_log) / p.actual_log).to_double());
        rep.predictions.push_back(std::move(p));
    }
    for (std::size_t n = 2; n <= available; ++n) {
        ExactFormulaCheck check = exact_formula_at(t, n, precision, rep.alpha);
        if (!check.residual.error_below_pow2(kFormulaTolerancePow2))
            check = verify_exact_formula(t, n, 2 * precision);
        rep.exact_formula.push_back(std::move(check));
    }
    return rep;
}

} // namespace cfseq
