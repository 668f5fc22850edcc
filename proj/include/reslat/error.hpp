#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reslat {

enum class ErrorKind {
  MalformedTable,
  AxiomViolation,
  NotResiduated,
  PreconditionViolated,
  DecompositionFailed,
  EmbeddingViolation,
  ParseError,
  UnboundVariable,
  RangeError,
  FormatError,
  IoError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse and format errors carry the offending position: a character offset
// for formulas, a 1-based line number for files.
class PositionedError : public Error {
 public:
  PositionedError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace reslat
