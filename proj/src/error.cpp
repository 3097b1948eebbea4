#include "tangleinv/error.hpp"

namespace tangleinv {

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(int line, const std::string& what)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage:
      return 1;
    case ErrorKind::Parse:
    case ErrorKind::Validation:
      return 2;
    case ErrorKind::Domain:
      return 3;
  }
  return 3;
}

}  // namespace tangleinv
