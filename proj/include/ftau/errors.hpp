#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftau {

// Base for every error raised on bad user input (CLI exit code 1).
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UserError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UserError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public UserError {
 public:
  using UserError::UserError;
};

}  // namespace ftau
