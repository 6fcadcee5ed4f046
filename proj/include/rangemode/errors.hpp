#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rangemode {

struct EmptyArrayError : std::invalid_argument {
  EmptyArrayError() : std::invalid_argument("input array is empty") {}
};

struct BadEpsilonError : std::invalid_argument {
  explicit BadEpsilonError(double eps)
      : std::invalid_argument("epsilon must lie in [0, 1/2], got " +
                              std::to_string(eps)) {}
};

struct BadBlockSizeError : std::invalid_argument {
  explicit BadBlockSizeError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct BadGridError : std::invalid_argument {
  explicit BadGridError(const std::string& what)
      : std::invalid_argument(what) {}
};

struct DimensionMismatchError : std::runtime_error {
  explicit DimensionMismatchError(const std::string& what)
      : std::runtime_error(what) {}
};

// Parse failure with 1-based source location.
struct DataFormatError : std::runtime_error {
  std::size_t line;
  std::size_t column;

  DataFormatError(const std::string& what, std::size_t line_, std::size_t col_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rangemode
