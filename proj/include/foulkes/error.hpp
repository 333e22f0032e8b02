#pragma once

#include <stdexcept>
#include <string>

namespace foulkes {

// Base of every error raised by the library. The CLI maps the subclasses to
// distinct exit codes, so new failure kinds should derive from one of them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unparseable text, overlapping blocks, non-partitions.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operands whose sizes do not agree (ground sets, diagram sizes, |λ| vs |ρ|).
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// An argument outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A request beyond a configured enumeration or memory cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A plethysm query covered neither by the stable formula nor by the oracle.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant failed at runtime. Always a bug.
class InternalFault : public Error {
 public:
  using Error::Error;
};

}  // namespace foulkes
