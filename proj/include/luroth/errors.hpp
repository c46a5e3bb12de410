#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace luroth {

// Malformed or inconsistent input: bad syntax, unknown variable, degree or
// dimension mismatch. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A mathematical hypothesis does not hold (singular matrix, base point,
// non-ordinary node, ...). The CLI maps these to exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace luroth
