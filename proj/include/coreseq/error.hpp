#pragma once

/**
 * @file error.hpp
 * @brief Exception types shared by every coreseq module.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coreseq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based character offset within the
/// offending line; `line` is 1-based, or 0 when the input was a single string.
struct parse_error : error {
    std::string message;
    std::size_t position;
    std::size_t line;

    parse_error(std::string const& what, std::size_t pos, std::size_t ln = 0)
        : error(format(what, pos, ln)), message(what), position(pos), line(ln) {}

private:
    static std::string format(std::string const& what, std::size_t pos, std::size_t ln) {
        std::string s = "parse error";
        if (ln != 0) s += " at line " + std::to_string(ln);
        s += " (column " + std::to_string(pos + 1) + "): " + what;
        return s;
    }
};

/// A precondition on an argument was violated (size mismatch, d = 0, ...).
struct invalid_argument : error {
    using error::error;
};

/// An internal consistency check failed. Seeing one is a bug or corrupt input data.
struct integrity_error : error {
    using error::error;
};

/// A dimension channel was asked for a value it does not cover.
struct coverage_error : error {
    using error::error;
};

/// A size or dimension cap was hit.
struct budget_exceeded : error {
    using error::error;
};

/// Substituting 1 for a variable made the denominator vanish.
struct singular_substitution : error {
    using error::error;
};

/// A guesser was given fewer terms than its precondition requires.
struct insufficient_terms : error {
    using error::error;
};

} // namespace coreseq
