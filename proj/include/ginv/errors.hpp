#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ginv {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short name of the violated precondition, e.g. "DimensionMismatch".
  virtual const char* kind() const noexcept = 0;
};

#define GINV_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    using Error::Error;                                           \
    const char* kind() const noexcept override { return #Name; }  \
  }

GINV_DEFINE_ERROR(DimensionMismatch);
GINV_DEFINE_ERROR(SingularMatrix);
GINV_DEFINE_ERROR(IndexOutOfRange);
GINV_DEFINE_ERROR(InvalidFactorization);
GINV_DEFINE_ERROR(NotIdempotent);
GINV_DEFINE_ERROR(IndexTooLarge);
GINV_DEFINE_ERROR(V4Singular);
GINV_DEFINE_ERROR(InternalInvariantViolation);

#undef GINV_DEFINE_ERROR

/// Malformed matrix file. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what, std::string source = {})
      : std::runtime_error(what), line_(line), column_(column), source_(std::move(source)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// File name, when the text came from a file.
  const std::string& source() const noexcept { return source_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string source_;
};

}  // namespace ginv
