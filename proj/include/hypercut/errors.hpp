#pragma once

#include <stdexcept>
#include <string>

namespace hypercut {

// A computation would exceed the configured brute-force caps. The message
// always states the cap that was hit.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed instance or certificate document. `line` is 1-based for
// line-oriented inputs and 0 when no line applies.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, int line, const std::string& message)
        : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                                      : source + ": " + message),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_ = 0;
};

}  // namespace hypercut
