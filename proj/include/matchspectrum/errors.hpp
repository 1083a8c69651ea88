#pragma once

#include <stdexcept>
#include <string>

namespace matchspectrum {

// Parse failures carry the 1-based input line where the problem was found.
// Inputs without line structure (JSON) use line 0 and a plain message.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? what + ", line " + std::to_string(line) : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// An exact-arithmetic step produced an impossible value: inexact division,
// negative count, or truncated mass. Always a bug or a violated input
// contract, never a recoverable condition.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured cap.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace matchspectrum
