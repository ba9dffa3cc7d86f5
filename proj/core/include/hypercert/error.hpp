#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hypercert {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad argument, bad window).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An index or window lies outside a sequence's stored range.
///
/// `required_last_index`, when set, is the smallest last index the sequence
/// would need for the request to succeed.
class RangeError : public ContractError {
 public:
  explicit RangeError(const std::string& what,
                      std::optional<std::int64_t> required_last_index = std::nullopt)
      : ContractError(what), required_last_index_(required_last_index) {}

  std::optional<std::int64_t> required_last_index() const { return required_last_index_; }

 private:
  std::optional<std::int64_t> required_last_index_;
};

/// Malformed text input. `line` is 1-based, 0 when not line oriented.
class ParseError : public ContractError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : ContractError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An internal consistency check failed. Always a bug, never bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercert
