#include "prefl/error.hpp"

#include <utility>

namespace prefl {

namespace {

std::string format_location(const std::string& source, std::size_t line, std::size_t column,
                            const std::string& message) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       std::size_t offset, std::string message)
    : Error(format_location(source, line, column, message)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      offset_(offset),
      message_(std::move(message)) {}

UnknownAtomError::UnknownAtomError(std::string source, std::size_t line, std::size_t column,
                                   std::size_t offset, std::string atom)
    : ParseError(std::move(source), line, column, offset, "unknown atom '" + atom + "'"),
      atom_(std::move(atom)) {}

}  // namespace prefl
