#pragma once

// Error taxonomy shared by every module. All domain failures derive from
// neighborly::Error so callers can catch one base; the concrete type says
// which contract was violated.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace neighborly {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A string contains a character outside {0,1,*}. Position is 1-based.
class InvalidCharacter : public Error {
 public:
  InvalidCharacter(char got, std::size_t position)
      : Error("invalid character '" + std::string(1, got) + "' at position " +
              std::to_string(position) + " (expected 0, 1 or *)"),
        character(got),
        position(position) {}
  char character;
  std::size_t position;  // 1-based
};

// A string length outside [1, 64], at parse, concat or construction time.
class LengthOutOfRange : public Error {
 public:
  explicit LengthOutOfRange(const std::string& msg) : Error(msg) {}
};

// An operation restricted to joker-free strings met a '*'.
class NotBinary : public Error {
 public:
  explicit NotBinary(const std::string& op)
      : Error(op + " requires a joker-free string") {}
};

// Two strings (or families) that must share a length do not.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)),
        lhs(lhs),
        rhs(rhs) {}
  explicit LengthMismatch(const std::string& msg) : Error(msg), lhs(0), rhs(0) {}
  std::size_t lhs;
  std::size_t rhs;
};

// An operation that needs members was given an empty family.
class EmptyFamily : public Error {
 public:
  explicit EmptyFamily(const std::string& what_needs_members)
      : Error(what_needs_members + " requires a non-empty family") {}
};

// Parameter outside its stated domain (d odd where even is required,
// s out of range, k out of range, ...).
class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

// t_index / a_cell applied to alpha or omega, which have no break index.
class ExtremalEpsilon : public Error {
 public:
  explicit ExtremalEpsilon(const std::string& which)
      : Error("epsilon is extremal (" + which + "); t(epsilon) is undefined") {}
};

// A 1-based coordinate index outside [1, d].
class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(int i, int d)
      : Error("index " + std::to_string(i) + " outside [1, " +
              std::to_string(d) + "]"),
        index(i),
        d(d) {}
  int index;
  int d;
};

// A bound formula applied outside the range its theorem states.
class OutOfStatedRange : public Error {
 public:
  explicit OutOfStatedRange(const std::string& msg) : Error(msg) {}
};

// A computation that would exceed the artifact's memory/size caps (e.g.
// materializing a family beyond the cap). Maps to the resource-limit exit
// code in the CLI.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

// The exact solver only handles full enumeration up to d = 8.
class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(int d, int limit)
      : Error("dimension " + std::to_string(d) +
              " exceeds the exact-search limit " + std::to_string(limit)),
        d(d),
        limit(limit) {}
  int d;
  int limit;
};

// Family file parse failures. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  std::size_t line;
};

class DuplicateMember : public ParseError {
 public:
  DuplicateMember(const std::string& member, std::size_t line)
      : ParseError("duplicate member '" + member + "'", line), member(member) {}
  std::string member;
};

}  // namespace neighborly
