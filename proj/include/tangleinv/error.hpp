#pragma once

#include <stdexcept>
#include <string>

namespace tangleinv {

// Error categories map one-to-one onto CLI exit codes (usage=1, parse and
// validation=2, domain=3).
enum class ErrorKind { Usage, Parse, Validation, Domain };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

int exit_code(ErrorKind kind) noexcept;

}  // namespace tangleinv
