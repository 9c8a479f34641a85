#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semidet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be turned into a table (ragged rows, unknown labels, ...).
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class ParseError : public MalformedTable {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : MalformedTable("line " + std::to_string(line) + ", column " + std::to_string(column) +
                       ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotAssociative : public Error {
 public:
  NotAssociative(std::size_t a, std::size_t b, std::size_t c, const std::string& what)
      : Error(what), a(a), b(b), c(c) {}
  std::size_t a, b, c;
};

class EmptyPhiSet : public Error {
 public:
  EmptyPhiSet(std::size_t element, const std::string& what) : Error(what), element(element) {}
  std::size_t element;
};

class NotSingletonRich : public Error {
 public:
  NotSingletonRich(std::size_t element, std::vector<std::size_t> kernel, const std::string& what)
      : Error(what), element(element), kernel(std::move(kernel)) {}
  std::size_t element;
  std::vector<std::size_t> kernel;
};

class CyclicLL : public Error {
 public:
  CyclicLL(std::vector<std::size_t> cycle, const std::string& what)
      : Error(what), cycle(std::move(cycle)) {}
  std::vector<std::size_t> cycle;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A witness the theory guarantees to exist was not found.
class NoWitness : public Error {
 public:
  using Error::Error;
};

class NoZeroElement : public Error {
 public:
  using Error::Error;
};

class DimensionCap : public Error {
 public:
  using Error::Error;
};

class NotLLLSmooth : public Error {
 public:
  using Error::Error;
};

class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace semidet
