#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violates an operation's stated precondition.
class precondition_error : public error {
public:
    using error::error;
};

/// The procedure ran to its cap without reaching a decision.
class undecided_error : public error {
public:
    using error::error;
};

/// An internal cross-check failed; indicates a library bug.
class internal_error : public error {
public:
    using error::error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw precondition_error(what);
}

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw internal_error(what);
}

} // namespace galois
