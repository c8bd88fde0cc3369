#pragma once

#include <stdexcept>
#include <string>

namespace psurf {

// Base class for every domain error raised by the classifier library.
class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& message) : std::runtime_error(message) {}
};

// A numerical bound on the input data is violated (genus, e, degrees, ranges).
class InadmissibleInvariant : public ClassificationError {
  using ClassificationError::ClassificationError;
};

// A bundle kind is claimed that cannot occur for the given base curve and e.
class InconsistentBundleKind : public ClassificationError {
  using ClassificationError::ClassificationError;
};

// An externally supplied effectiveness answer contradicts a forced value.
class EffectivenessConflict : public ClassificationError {
  using ClassificationError::ClassificationError;
};

// Positioned error from the surface-description parser. Line and column are
// 1-based; (0, 0) marks inputs without a text position (command-line flags).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(format(line, column, message)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    if (line <= 0) return "parse error: " + message;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace psurf
