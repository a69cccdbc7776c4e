#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefl {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; offset is the 0-based
/// byte offset into the text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             std::size_t offset, std::string message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::size_t offset_;
  std::string message_;
};

/// An atom that is not part of the governing alphabet.
class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(std::string source, std::size_t line, std::size_t column,
                   std::size_t offset, std::string atom);

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// A size limit (alphabet, universe, rule count) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A selection function's domain does not support the requested check.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Never caught by the library or the CLI.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prefl
