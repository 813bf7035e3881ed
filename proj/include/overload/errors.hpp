#ifndef OVERLOAD_ERRORS_HPP
#define OVERLOAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace overload {

/// An input lies outside the mathematical domain of an operation
/// (unnormalized information level, negative energy, log boundary...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The objective or map produced NaN or +inf.
class EvaluationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Root bracket endpoints do not straddle a sign change.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fixed-point iterate left its admissible box.
class DivergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scenario text failed to parse or validate. Carries the offending line
/// (1-based, 0 when the problem is not tied to a line) and key.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, std::string key, const std::string& message)
      : std::runtime_error(format(line, key, message)), line_(line), key_(std::move(key)) {}

  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

private:
  static std::string format(int line, const std::string& key, const std::string& message) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += key + ": ";
    return out + message;
  }

  int line_;
  std::string key_;
};

}  // namespace overload

#endif
