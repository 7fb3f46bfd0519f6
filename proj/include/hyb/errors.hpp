#pragma once

#include <stdexcept>
#include <string>

namespace hyb {

// Parse failure in any of the text formats; position is a 0-based offset
// into the input buffer.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Semantically invalid input (label clashes, mismatched taxa, broken
// preconditions).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact solver or oracle was asked to run beyond its configured cap.
struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyb
