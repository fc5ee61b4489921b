#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace trigdecomp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The exact answer needs a radical that does not live in Q(i, sqrt2, sqrt3).
class FieldExtensionError : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree " + std::to_string(degree) + " exceeds cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error("syntax error at offset " + std::to_string(offset) +
              ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace trigdecomp
