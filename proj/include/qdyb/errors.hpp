#pragma once

#include <stdexcept>
#include <string>

namespace qdyb {

/// Invalid argument outside the mathematical domain (Im tau <= 0, |p| >= 1, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at (or too close to) a pole or zero of a denominator.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated sum or product hit its hard term cap before converging.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix that must be inverted is singular or too ill-conditioned.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// p^k is too close to an eigenvalue of the linear part of the germ.
class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(const std::string& what, int order)
      : std::runtime_error(what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

}  // namespace qdyb
