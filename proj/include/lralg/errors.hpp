#ifndef LRALG_ERRORS_HPP
#define LRALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lralg {

/// Base of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class IndexOutOfRange : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A structure fails a defining identity. `indices` are 1-based basis labels.
class IdentityViolation : public AlgebraError {
 public:
  IdentityViolation(std::string identity, std::vector<int> indices, std::string residual)
      : AlgebraError(identity + " violated at " + format_indices(indices) + ", residual " + residual),
        identity_(std::move(identity)),
        indices_(std::move(indices)),
        residual_(std::move(residual)) {}

  const std::string& identity() const { return identity_; }
  const std::vector<int>& indices() const { return indices_; }
  const std::string& residual() const { return residual_; }

  static std::string format_indices(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
  }

 private:
  std::string identity_;
  std::vector<int> indices_;
  std::string residual_;
};

class JacobiViolation : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};
class AntisymmetryConflict : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};
class LR1Violation : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};
class LR2Violation : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};
class CompatViolation : public IdentityViolation {
 public:
  using IdentityViolation::IdentityViolation;
};

class NotAnIdeal : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class SpecViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotTwoStepNilpotent : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class HypothesisFailed : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotInvertible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotAbelian : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class LiftConditionsFailed : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnknownName : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParamOutOfDomain : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class IncompleteAssignment : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Input text could not be parsed. Line and column are 1-based.
class ParseError : public AlgebraError {
 public:
  ParseError(int line, int column, const std::string& what)
      : AlgebraError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace lralg

#endif  // LRALG_ERRORS_HPP
