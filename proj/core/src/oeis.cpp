#include "cfseq/oeis.hpp"

#include "cfseq/rational.hpp"
#include "cfseq/recurrence.hpp"
#include "cfseq/theorem.hpp"

#include <algorithm>

namespace cfseq {

namespace {

long long max_index(const std::optional<BFile>& b)
{
    if (!b || b->entries.empty())
        return -1;
    return b->entries.back().first;
}

// Enough depth for ~140 certified digits before any b-file asks for more.
constexpr std::size_t kMinDepth = 7;

} // namespace

bool OeisReport::all_matched() const
{
    if (!digits.ok || (digits.bfile && !digits.bfile->matched()))
        return false;
    return std::all_of(diffs.begin(), diffs.end(), [](const SequenceDiff& d) { return d.matched(); });
}

std::vector<int> certified_shifted_sum_digits(std::size_t depth, std::size_t count)
{
    const SeqTable t = generate(make_poly({1, 1}), depth + 1, std::max(depth + 1, kDefaultMaxTerms));
    const Rational lo = Rational(BigInt(1)) + partial_sum(t, depth);
    const Rational hi = lo + Rational(BigInt(2), t.x(depth + 1));

    std::vector<int> digits;
    BigInt scale = 1;
    for (std::size_t k = 0; k < count; ++k, scale *= 10) {
        const BigInt a = (lo * Rational(scale)).floor();
        const BigInt b = (hi * Rational(scale)).floor();
        if (a != b)
            break;
        digits.push_back(static_cast<int>(BigInt(a % 10).get_si()));
    }
    return digits;
}

OeisReport oeis_check(const OeisBFiles& files, std::size_t max_depth)
{
    long long need = static_cast<long long>(kMinDepth);
    need = std::max(need, max_index(files.terms));
    need = std::max(need, max_index(files.ratios) + 1);
    need = std::max(need, max_index(files.coefficients) / 2 + 1);

    OeisReport rep;
    rep.depth = std::min(static_cast<std::size_t>(need), std::max(max_depth, kMinDepth));
    const SeqTable t = generate(make_poly({1, 1}), rep.depth, std::max(rep.depth, kDefaultMaxTerms));

    if (files.terms)
        rep.diffs.push_back(compare_sequence(*files.terms, t.xs()));
    if (files.ratios)
        rep.diffs.push_back(compare_sequence(*files.ratios, t.ys()));
    if (files.coefficients) {
        const std::vector<BigInt> coeffs = shifted_sum_coeffs(t, 2 * rep.depth - 1);
        rep.diffs.push_back(compare_sequence(*files.coefficients, coeffs));
    }

    const std::string expected = rep.digits.expected;
    const std::size_t wanted = expected.size() - 1; // digits without the point
    const std::vector<int> leading = certified_shifted_sum_digits(rep.depth, wanted);
    for (std::size_t i = 0; i < leading.size(); ++i) {
        rep.digits.computed += static_cast<char>('0' + leading[i]);
        if (i == 0)
            rep.digits.computed += '.';
    }
    rep.digits.ok = rep.digits.computed == expected;

    if (files.digits && !files.digits->entries.empty()) {
        // The b-file's first index is taken as the position of the leading digit.
        const long long offset = files.digits->entries.front().first;
        const long long last = files.digits->entries.back().first;
        const std::vector<int> stream = certified_shifted_sum_digits(
            rep.depth, static_cast<std::size_t>(last - offset + 1));
        std::vector<BigInt> positioned(static_cast<std::size_t>(offset), BigInt(-1));
        for (int d : stream)
            positioned.emplace_back(d);
        rep.digits.bfile = compare_sequence(*files.digits, positioned);
    }
    return rep;
}

} // namespace cfseq
