#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmrig {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different carriers, or a key is outside its carrier.
class carrier_mismatch : public error {
 public:
  using error::error;
};

// The self-map was used in symmetric-algebra mode, or an operation was asked
// of a carrier it does not support.
class unsupported_operation : public error {
 public:
  using error::error;
};

// Wrong number of tensor factors, or a permutation that is not a bijection.
class arity_mismatch : public error {
 public:
  using error::error;
};

class rule_not_applicable : public error {
 public:
  using error::error;
};

class missing_image : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fmrig
