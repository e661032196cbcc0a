#ifndef FOLINT_ERRORS_HPP
#define FOLINT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folint {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed value construction: variable-set mismatch, zero denominator,
// division of the zero polynomial, and similar.
struct structural_error : error {
    using error::error;
};

// A mathematically valid object used outside an operation's domain
// (linearizing at a non-singular point, Baum-Bott with a zero eigenvalue, ...).
struct domain_error : error {
    using error::error;
};

// Lexical or syntactic failure; `offset` is the byte position in the input.
struct parse_error : error {
    std::size_t offset;
    parse_error(std::size_t off, const std::string& what)
        : error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Bad job configuration or input file.
struct input_error : error {
    using error::error;
};

}  // namespace folint

#endif
