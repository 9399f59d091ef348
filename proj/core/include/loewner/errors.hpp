#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

// Precondition violations (bad parameter ranges, points outside a domain).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation ran but its result does not meet the requested quality
// (excessive Monte Carlo discards, stderr cap exceeded, stalled quadrature).
class QualityError : public std::runtime_error {
 public:
  explicit QualityError(const std::string& what) : std::runtime_error(what) {}
};

// Series or iteration failed to converge within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The reversed Loewner flow came closer to the driving point than the
// configured floor; the sample is unusable.
class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(const std::string& what) : std::runtime_error(what) {}
};

// An exact linear solve hit a non-invertible matrix outside the handled
// degenerate cases.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace loewner
