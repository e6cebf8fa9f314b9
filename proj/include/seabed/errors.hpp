#pragma once

#include <stdexcept>
#include <string>

namespace seabed {

/// Base for every error the library raises. `kind()` is a stable tag used in
/// machine-readable error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

class DegenerateParametrization : public Error {
 public:
  explicit DegenerateParametrization(const std::string& what)
      : Error("DegenerateParametrization", what) {}
};

class SelfIntersection : public Error {
 public:
  explicit SelfIntersection(const std::string& what) : Error("SelfIntersection", what) {}
};

class TooCloseToCurve : public Error {
 public:
  explicit TooCloseToCurve(const std::string& what) : Error("TooCloseToCurve", what) {}
};

class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, double last_residual)
      : Error("NoConvergence", "no convergence after " + std::to_string(iterations) +
                                   " iterations (last change " +
                                   std::to_string(last_residual) + ")"),
        iterations_(iterations),
        last_residual_(last_residual) {}
  int iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

 private:
  int iterations_;
  double last_residual_;
};

class BottomContact : public Error {
 public:
  explicit BottomContact(const std::string& what) : Error("BottomContact", what) {}
};

class StabilityFailure : public Error {
 public:
  explicit StabilityFailure(const std::string& what) : Error("StabilityFailure", what) {}
};

class OutOfRegime : public Error {
 public:
  explicit OutOfRegime(const std::string& what) : Error("OutOfRegime", what) {}
};

class FitFailure : public Error {
 public:
  explicit FitFailure(const std::string& what) : Error("FitFailure", what) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("ParseError", "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace seabed
