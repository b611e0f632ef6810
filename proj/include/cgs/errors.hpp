#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgs {

// Caller broke a precondition (mismatched rings, zero divisor, ...).
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Rejected text input. Positions are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        raw_(msg),
        line_(line),
        column_(column) {}

  const std::string& raw_message() const noexcept { return raw_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string raw_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cgs
