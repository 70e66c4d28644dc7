#pragma once

#include <stdexcept>
#include <string>

namespace aq {

// Malformed input: bad indices, zero denominators, inconsistent sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The order-k linear system has no solution.
class ObstructionError : public std::runtime_error {
 public:
  ObstructionError(const std::string& what, int order, std::string generator)
      : std::runtime_error(what), order_(order), generator_(std::move(generator)) {}
  int order() const { return order_; }
  const std::string& generator() const { return generator_; }

 private:
  int order_;
  std::string generator_;
};

// A basic-set presentation that no polynomial change of basis can make primitive.
class NonPrimitivizableError : public std::runtime_error {
 public:
  NonPrimitivizableError(const std::string& what, int stage)
      : std::runtime_error(what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

}  // namespace aq
