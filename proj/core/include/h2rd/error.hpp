#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace h2rd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries the source name and 1-based line number
/// when the problem can be pinned to a line (0 otherwise).
class DataError : public Error {
 public:
  DataError(std::string source, std::size_t line, const std::string& message)
      : Error(format(source, line, message)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& message) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + message;
  }

  std::string source_;
  std::size_t line_;
};

/// Raised when a solver result is requested in a state it does not have
/// (for example decoding a non-optimal solve).
class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace h2rd
