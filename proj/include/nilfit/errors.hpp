#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nilfit {

// Base of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: malformed text, mismatched contexts, violated preconditions.
// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Syntax error in polynomial or JSON input; `position` is a 0-based offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Point set is not (k-2)-generic; `witness` holds 1-based labels of one
// violating (k-1)-subset.
class NotGenericError : public InputError {
public:
    NotGenericError(const std::string& msg, std::vector<int> witness)
        : InputError(msg), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

// A configured cap (pair count, term count, generator count, ...) was hit.
// Never produces a wrong answer; the computation is aborted instead.
class ResourceLimitError : public InputError {
public:
    using InputError::InputError;
};

// An internal cross-check failed (algebraic route disagrees with the
// combinatorial one). Must never fire on valid input; the CLI maps it to
// exit code 1.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

}  // namespace nilfit
