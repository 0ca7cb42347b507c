#pragma once

#include "cfseq/bigint.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cfseq {

/// OEIS b-file: `#` comment lines, data lines `index value`.
struct BFile
{
    std::string source_id;
    std::vector<std::pair<long long, BigInt>> entries;
};

/// Throws ParseError on malformed lines, negative indices or non-increasing indices.
BFile parse_bfile(std::istream& in, std::string source_id);
/// Throws IoError if the file cannot be opened.
BFile read_bfile(const std::filesystem::path& path, std::string source_id = {});

struct SequenceDiff
{
    std::string source_id;
    std::size_t compared = 0;
    std::optional<long long> first_mismatch;
    BigInt expected; // b-file value at first_mismatch
    BigInt actual;   // generated value at first_mismatch

    bool matched() const { return !first_mismatch; }
};

/// Compares entries whose index falls inside `generated` (index i <-> generated[i]).
SequenceDiff compare_sequence(const BFile& bfile, std::span<const BigInt> generated);

} // namespace cfseq
