#pragma once

#include <stdexcept>
#include <string>

namespace bwcode {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes (usage -> 2, capacity -> 3, everything else -> 1).

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

}  // namespace bwcode
