#pragma once

#include <stdexcept>
#include <string>

namespace coinduct {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not fit the structure it is used with: carrier mismatch,
/// unknown element or rule id, ill-formed rule set or container, bad file.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed document. `location` is a JSON-pointer-like path.
class FormatError : public InvalidInput {
 public:
  FormatError(std::string location, const std::string& message)
      : InvalidInput(location + ": " + message), location_(std::move(location)), message_(message) {}

  const std::string& location() const noexcept { return location_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// A configured size bound (oracle width, choice-function cap) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Well-formed request whose answer is negative: element not derivable, not in
/// the coinductive predicate, nothing to destruct, non-monotone operator.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace coinduct
