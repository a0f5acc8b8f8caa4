#pragma once

#include <stdexcept>
#include <string>

namespace aspec {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Domain errors: violated mathematical preconditions. CLI exit code 3.
class MathError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public MathError {
 public:
  using MathError::MathError;
};

class DivisionByZero : public MathError {
 public:
  using MathError::MathError;
};

class SizeMismatch : public MathError {
 public:
  using MathError::MathError;
};

class SingularMatrix : public MathError {
 public:
  using MathError::MathError;
};

class PresentationMismatch : public MathError {
 public:
  using MathError::MathError;
};

class CompositionMismatch : public MathError {
 public:
  using MathError::MathError;
};

class RelationViolation : public MathError {
 public:
  using MathError::MathError;
};

class SourceRelationViolation : public MathError {
 public:
  using MathError::MathError;
};

class NonRationalRelations : public MathError {
 public:
  using MathError::MathError;
};

class NotSimpleSummand : public MathError {
 public:
  using MathError::MathError;
};

class NonFunctorialDiagram : public MathError {
 public:
  using MathError::MathError;
};

class InvalidModule : public MathError {
 public:
  using MathError::MathError;
};

class InnerNotContained : public MathError {
 public:
  using MathError::MathError;
};

class CharNotZero : public MathError {
 public:
  using MathError::MathError;
};

class DuplicatePoint : public MathError {
 public:
  using MathError::MathError;
};

// Input-text errors: CLI exit code 2.
class ParseFailure : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ParseFailure {
 public:
  SyntaxError(const std::string& what, int column)
      : ParseFailure(what + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

class DocumentError : public ParseFailure {
 public:
  using ParseFailure::ParseFailure;
};

// Document-level semantic failures (a module violating its relations). Exit code 3.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad invocation. Exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace aspec
