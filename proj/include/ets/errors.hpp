#pragma once

#include <stdexcept>
#include <string>

namespace ets {

// Base class for all numerical/domain failures raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at a pole of Gamma (non-positive integer argument, alpha = 1 path).
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A series or iteration failed its error target within the term budget.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Out-of-range atom or direction index.
class IndexError : public Error {
 public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Cholesky pivot below threshold: matrix is not positive definite.
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

// A triangular transform with a (numerically) zero diagonal entry.
class SingularTransform : public Error {
 public:
  explicit SingularTransform(const std::string& msg) : Error(msg) {}
};

// Expected rejection work per sample exceeds the configured bound.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Time step exceeds the RK4 stability bound for the current symbol.
class StabilityViolation : public Error {
 public:
  explicit StabilityViolation(const std::string& msg) : Error(msg) {}
};

// Inverted density mass too far from 1 (grid too narrow or too coarse).
class MassDeficit : public Error {
 public:
  explicit MassDeficit(const std::string& msg) : Error(msg) {}
};

// |CF| at the Fourier-grid boundary is too large; inversion would alias.
class AliasingSuspected : public Error {
 public:
  explicit AliasingSuspected(const std::string& msg) : Error(msg) {}
};

// Too many samples fall outside the density grid for a KS comparison.
class CoverageError : public Error {
 public:
  explicit CoverageError(const std::string& msg) : Error(msg) {}
};

// Series partial sum does not meet the requested remainder bound.
class TruncationTooCoarse : public Error {
 public:
  explicit TruncationTooCoarse(const std::string& msg) : Error(msg) {}
};

// Intermediate series term left the representable range before decaying.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

}  // namespace ets
