#pragma once

#include <stdexcept>
#include <string>

namespace bqk {

// malformed input: bad shapes, unreadable files, zero exponents (CLI exit 2)
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// inputs are well formed but violate a mathematical precondition (CLI exit 1)
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a configured cap was exceeded (CLI exit 1)
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// diagram text could not be parsed (CLI exit 2)
class ParseError : public MalformedInput {
 public:
  ParseError(int line, const std::string& msg)
      : MalformedInput("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bqk
