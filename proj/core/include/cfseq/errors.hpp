#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfseq {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// F fails the admissibility hypotheses (nonnegative coefficients, F(0) = 1, deg F >= 1).
class RejectedPoly : public Error
{
public:
    using Error::Error;
};

// A division that must be exact left a remainder. Inside the admissible
// pipeline this means a bug or a falsified identity, never bad input.
class InexactDivision : public Error
{
public:
    InexactDivision(std::size_t index, const std::string& what);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SingularityHit : public Error
{
public:
    explicit SingularityHit(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class InvalidQuotient : public Error
{
public:
    explicit InvalidQuotient(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// A verification sub-check failed. `check` names the check, `index` the
// offending position in its own indexing.
class Mismatch : public Error
{
public:
    Mismatch(std::string check, std::size_t index, const std::string& detail);
    const std::string& check() const noexcept { return check_; }
    std::size_t index() const noexcept { return index_; }

private:
    std::string check_;
    std::size_t index_;
};

class InsufficientTerms : public Error
{
public:
    using Error::Error;
};

class ConfigRejected : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace cfseq
