#pragma once

#include <stdexcept>
#include <string>

namespace urep {

// A documented precondition of an operation does not hold.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is larger than an algorithm's documented size bound.
class bound_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed textual input. `token()` is the offending fragment.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::string token)
      : std::invalid_argument(what + " (offending token: '" + token + "')"),
        token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace urep
