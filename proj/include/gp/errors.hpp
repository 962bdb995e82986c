#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Thrown when a desk-scale enumeration guard is exceeded.  Guards are hard
// errors, never silent truncation.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text-format parsers; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gp
