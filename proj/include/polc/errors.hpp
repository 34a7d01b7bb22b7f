#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polc {

/// Malformed user input: bad regex, bad DFA file, alphabet mismatch.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegexError : public InputError {
public:
    RegexError(const std::string& what, std::size_t offset)
        : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A configured cap (monoid size, automaton size, lattice size, ...) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check derived from one of the characterization theorems failed.
/// This never signals bad input; it means the implementation is wrong.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace polc
