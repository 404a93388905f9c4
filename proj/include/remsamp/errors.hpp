// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace remsamp {

// Base for all toolkit errors. `code` is a stable machine-readable slug
// used by the CLI error line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("parse", "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class TimeOrderError : public Error {
 public:
  explicit TimeOrderError(const std::string& message)
      : Error("time_order", message) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

class SeparationError : public Error {
 public:
  SeparationError(const std::string& message, std::vector<std::string> coords)
      : Error("separation", message), coordinates_(std::move(coords)) {}
  const std::vector<std::string>& coordinates() const { return coordinates_; }

 private:
  std::vector<std::string> coordinates_;
};

class NonIdentifiableError : public Error {
 public:
  explicit NonIdentifiableError(const std::string& message)
      : Error("non_identifiable", message) {}
};

}  // namespace remsamp
