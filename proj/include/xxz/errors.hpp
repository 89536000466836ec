#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

// Argument outside the documented domain of an operation.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Basis state or register that is not a member of the sector it was looked up in.
class NotFound : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Requested problem exceeds a configured size cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Solver failure or a result that violates a numerical postcondition.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An analytic construction could not produce its full result (e.g. no real root).
class DegradedResult : public std::runtime_error {
public:
  DegradedResult(const std::string& what, std::string diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
  std::string diagnostics_;
};

// Malformed configuration text; key_path names the offending key ("" for document-level).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string key_path, const std::string& message)
      : std::runtime_error(key_path.empty() ? message : key_path + ": " + message),
        key_path_(std::move(key_path)) {}
  const std::string& key_path() const noexcept { return key_path_; }

private:
  std::string key_path_;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace xxz
