#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringcodes {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured candidate budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t requested, std::size_t budget)
      : Error(what + " (needs " + std::to_string(requested) + " candidates, budget " +
              std::to_string(budget) + ")"),
        requested_(requested),
        budget_(budget) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

class UndefinedDistance : public Error {
 public:
  UndefinedDistance() : Error("minimum distance of the zero code is undefined") {}
};

// A theorem or construction was asked for outside its hypotheses.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

// A certified constructor found one of its named preconditions false.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string hypothesis, const std::string& what)
      : Error("hypothesis violated: " + what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ringcodes
