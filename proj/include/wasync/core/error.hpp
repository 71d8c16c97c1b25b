#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wasync {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument, precondition violation or malformed input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A search cap or budget was exhausted before an answer was known.
/// This is "unknown", never "no".
class ResourceError : public Error {
 public:
  ResourceError(std::string cap_name, std::size_t cap_value)
      : Error("resource cap exceeded: " + cap_name + " = " + std::to_string(cap_value)),
        cap_name_(std::move(cap_name)),
        cap_value_(cap_value) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap_value() const noexcept { return cap_value_; }

 private:
  std::string cap_name_;
  std::size_t cap_value_;
};

}  // namespace wasync
