#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus {

enum class ErrorKind {
  NotSurjective,
  Degenerate,
  NonPositive,
  OutOfRange,
  IntegerOverflow,
  LobeOutOfRange,
  NotHomogeneous,
  IndexRange,
  NotACactus,
  ResourceBound,
  MaxValueNotUnique,
  SyntaxError,
  InvalidArgument,
};

std::string_view kindName(ErrorKind kind) noexcept;

// Every failure raised by the engine carries a kind so callers (and the CLI)
// can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kindName(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Parse failures additionally carry a 1-based line/column.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(ErrorKind::SyntaxError, message + " at line " + std::to_string(line) +
                                          ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cactus
