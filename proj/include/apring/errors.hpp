#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apring {

// Broad failure classes. The CLI maps these onto process exit codes
// (parse -> 2, numeric/guard -> 3, io -> 4).
enum class ErrorKind { Parse, Numeric, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct EmptyList : Error {
  EmptyList() : Error(ErrorKind::Numeric, "frequency list must be nonempty") {}
};

struct TooManyWeights : Error {
  TooManyWeights(std::size_t n, std::size_t cap)
      : Error(ErrorKind::Numeric, "weight count " + std::to_string(n) +
                                      " exceeds solver cap " + std::to_string(cap)) {}
};

struct NotIntegral : Error {
  NotIntegral(std::size_t index, double scaled)
      : Error(ErrorKind::Numeric, "weight " + std::to_string(index) +
                                      " scales to non-integer " + std::to_string(scaled)) {}
};

struct SumCapExceeded : Error {
  SumCapExceeded(long long sum, long long cap)
      : Error(ErrorKind::Numeric, "scaled weight sum " + std::to_string(sum) +
                                      " exceeds cap " + std::to_string(cap)) {}
};

struct WrongArity : Error {
  explicit WrongArity(std::size_t n)
      : Error(ErrorKind::Numeric,
              "closed form requires 1..4 weights, got " + std::to_string(n)) {}
};

struct NoExactMethod : Error {
  explicit NoExactMethod(std::size_t n)
      : Error(ErrorKind::Numeric,
              "no exact solver for " + std::to_string(n) + " weights") {}
};

struct StepTooCoarse : Error {
  StepTooCoarse(double step, double max_step)
      : Error(ErrorKind::Numeric, "step " + std::to_string(step) +
                                      " exceeds guard " + std::to_string(max_step)) {}
};

struct EmptyWindow : Error {
  EmptyWindow() : Error(ErrorKind::Numeric, "window is empty") {}
};

struct TooFewSamples : Error {
  explicit TooFewSamples(std::size_t n)
      : Error(ErrorKind::Numeric,
              "need at least 2 samples, got " + std::to_string(n)) {}
};

struct SpecParseError : Error {
  explicit SpecParseError(const std::string& message)
      : Error(ErrorKind::Parse, message) {}
};

struct IoError : Error {
  explicit IoError(const std::string& message) : Error(ErrorKind::Io, message) {}
};

}  // namespace apring
