// Copyright 2026 The isg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISG_ERROR_HPP_
#define ISG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a structural rule (duplicate ids, bad JSON
// element, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Precondition violation: wrong host, root not in graph, non-simple graph
// where a simple one is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured cap would be exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the requested semigroup kind.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An abstract semigroup does not have the shape of an Fisg image.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Inconsistent request, e.g. a root given for an unrooted kind.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken. Never expected to fire.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace isg

#endif  // ISG_ERROR_HPP_
