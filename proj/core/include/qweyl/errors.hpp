#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qweyl {

// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two values of different rank were combined.
class RankMismatch : public Error {
public:
    RankMismatch(std::size_t lhs, std::size_t rhs)
        : Error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
    explicit RankMismatch(const std::string& what) : Error(what) {}
};

// Exact Laurent division left a remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class InvalidArgs : public Error {
public:
    using Error::Error;
};

// A generator, root or reflection index outside its admissible range.
class InvalidIndex : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Element atoms and operator atoms used in the same expression.
class ContextMix : public Error {
public:
    using Error::Error;
};

} // namespace qweyl
