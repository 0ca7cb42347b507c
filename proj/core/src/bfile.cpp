#include "cfseq/bfile.hpp"

#include "cfseq/errors.hpp"

#include <fstream>
#include <istream>
#include <string>
#include <string_view>

namespace cfseq {

namespace {

// \s as in ECMAScript regular expressions
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t skip_space(std::string_view s, std::size_t i)
{
    while (i < s.size() && is_space(s[i]))
        ++i;
    return i;
}

// -?\d+ starting at i; returns the end position or npos
std::size_t scan_integer(std::string_view s, std::size_t i)
{
    if (i < s.size() && s[i] == '-')
        ++i;
    const std::size_t digits_start = i;
    while (i < s.size() && is_digit(s[i]))
        ++i;
    return i == digits_start ? std::string_view::npos : i;
}

} // namespace

BFile parse_bfile(std::istream& in, std::string source_id)
{
    BFile out;
    out.source_id = std::move(source_id);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view s(line);
        std::size_t i = skip_space(s, 0);
        if (i == s.size() || s[i] == '#')
            continue;

        const std::size_t idx_end = scan_integer(s, i);
        if (idx_end == std::string_view::npos || idx_end == s.size() || !is_space(s[idx_end]))
            throw ParseError(line_no, "expected 'index value'");
        const std::string_view idx_text = s.substr(i, idx_end - i);

        i = skip_space(s, idx_end);
        const std::size_t val_end = scan_integer(s, i);
        if (val_end == std::string_view::npos || skip_space(s, val_end) != s.size())
            throw ParseError(line_no, "expected 'index value'");
        const std::string_view val_text = s.substr(i, val_end - i);

        if (idx_text.front() == '-')
            throw ParseError(line_no, "negative index " + std::string(idx_text)
                                          + "; these sequences start at index 0");
        long long index = 0;
        try {
            index = std::stoll(std::string(idx_text));
        } catch (const std::out_of_range&) {
            throw ParseError(line_no, "index out of range");
        }
        if (!out.entries.empty() && index <= out.entries.back().first)
            throw ParseError(line_no, "index " + std::to_string(index) + " does not increase");
        out.entries.emplace_back(index, parse_decimal(val_text));
    }
    return out;
}

BFile read_bfile(const std::filesystem::path& path, std::string source_id)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open b-file " + path.string());
    if (source_id.empty())
        source_id = path.stem().string();
    return parse_bfile(in, std::move(source_id));
}

SequenceDiff compare_sequence(const BFile& bfile, std::span<const BigInt> generated)
{
    SequenceDiff diff;
    diff.source_id = bfile.source_id;
    for (const auto& [index, value] : bfile.entries) {
        if (index < 0 || static_cast<unsigned long long>(index) >= generated.size())
            continue;
        ++diff.compared;
        const BigInt& mine = generated[static_cast<std::size_t>(index)];
        if (mine != value) {
            diff.first_mismatch = index;
            diff.expected = value;
            diff.actual = mine;
            break;
        }
    }
    return diff;
}

} // namespace cfseq
