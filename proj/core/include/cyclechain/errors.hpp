#pragma once

#include <stdexcept>
#include <string>

namespace cyclechain {

// Malformed input data (graph files, family parameters, config values).
// line() is 1-based when the source position is known, 0 otherwise.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A requested computation exceeds the configured size cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclechain
