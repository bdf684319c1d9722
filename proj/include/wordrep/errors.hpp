#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NoSuchOccurrence : public Error {
 public:
  using Error::Error;
};

class InvalidSize : public Error {
 public:
  using Error::Error;
};

class AnchorNotFound : public Error {
 public:
  using Error::Error;
};

class OverlappingAnchors : public Error {
 public:
  using Error::Error;
};

class NoKnownWord : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidFamilyParams : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in a graph or word file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace wordrep
