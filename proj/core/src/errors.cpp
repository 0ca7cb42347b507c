#include "cfseq/errors.hpp"

namespace cfseq {

InexactDivision::InexactDivision(std::size_t index, const std::string& what)
    : Error("inexact division at index " + std::to_string(index) + ": " + what), index_(index)
{
}

SingularityHit::SingularityHit(std::size_t index)
    : Error("singularity: F(x_" + std::to_string(index) + ") = 0"), index_(index)
{
}

InvalidQuotient::InvalidQuotient(std::size_t index)
    : Error("partial quotient a_" + std::to_string(index) + " must be >= 1"), index_(index)
{
}

Mismatch::Mismatch(std::string check, std::size_t index, const std::string& detail)
    : Error(check + " failed at index " + std::to_string(index) + ": " + detail), check_(std::move(check)),
      index_(index)
{
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

} // namespace cfseq
