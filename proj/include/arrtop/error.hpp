#ifndef ARRTOP_ERROR_HPP
#define ARRTOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arrtop {

// Error taxonomy shared by the library, the C API and the CLI.
// Parse       : malformed input (bad JSON, bad rational string, bad builtin name)
// Invalid     : a contract violation (caller passed nonsense to a valid API)
// Precondition: structurally valid input that a routine refuses (cap exceeded,
//               non-essential arrangement, rank != 2, combinatorial mode)
// Symmetry    : the arrangement is not invariant under a requested reflection
enum class ErrorKind { Parse, Invalid, Precondition, Symmetry, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace arrtop

#endif
