#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streamlab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a stream is queried at or beyond the configured index ceiling.
class CeilingExceeded : public Error {
public:
  CeilingExceeded(std::size_t index, std::size_t ceiling)
      : Error("index " + std::to_string(index) + " exceeds ceiling " +
              std::to_string(ceiling)),
        index_(index), ceiling_(ceiling) {}
  std::size_t index() const noexcept { return index_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

private:
  std::size_t index_;
  std::size_t ceiling_;
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

/// Syntax error carrying the byte offset into the parsed text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class FormatError : public Error {
public:
  using Error::Error;
};

}  // namespace streamlab
