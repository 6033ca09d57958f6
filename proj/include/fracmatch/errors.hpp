#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracmatch {

/// Malformed graph6 input. Carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Graph size outside what an operation supports.
class UnsupportedSizeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive subset search refused because 2^n would be too large.
class CapExceededError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// canonicalize() detected a configuration that only a non-optimal
/// fractional matching can exhibit.
class NonOptimalInputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fracmatch
