#ifndef MUTID_ERROR_HPP
#define MUTID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutid
{

// Malformed bracket strings, identity files and triplet files.  Line and
// column are 1-based; line is 0 when the input is a single string.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &what, std::size_t column, std::size_t line = 0);

    std::size_t line() const noexcept { return m_line; }
    std::size_t column() const noexcept { return m_column; }
    const std::string &message() const noexcept { return m_message; }

private:
    std::string m_message;
    std::size_t m_line;
    std::size_t m_column;
};

// A computation refused to start (or stopped) because it would exceed a
// configured size guard.
class ResourceLimit : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A progress hook asked a long computation to stop.
class Cancelled : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A mathematical consistency check failed: non-invariant subspace, failed
// containment, non-integral multiplicity, dependent lattice basis...
class ConsistencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace mutid

#endif
