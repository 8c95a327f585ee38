#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pavg {

// Error taxonomy shared by the library and the CLI. The CLI maps kinds to
// exit codes: usage/parse -> 2, capacity/precision -> 3, everything else -> 3.
enum class ErrorKind {
  Domain,     // argument outside the operation's mathematical domain
  Range,      // index or argument outside what the table covers
  Capacity,   // table too small for the request; carries the required limit
  Precision,  // comparison undecided at maximum working precision
  Integrity,  // inconsistent data (corrupted cache, non-integer inversion)
  Parse,      // malformed input text (rationals, config files)
  Io,         // file I/O failure
  Resource,   // allocation failure or platform limit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t required_limit, const std::string& what)
      : Error(ErrorKind::Capacity, what), required_limit_(required_limit) {}
  std::uint64_t required_limit() const { return required_limit_; }

 private:
  std::uint64_t required_limit_;
};

class PrecisionError : public Error {
 public:
  PrecisionError(std::int64_t index, const std::string& what)
      : Error(ErrorKind::Precision, what), index_(index) {}
  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(ErrorKind::Integrity, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

}  // namespace pavg
