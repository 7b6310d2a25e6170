#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chartlab {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input map is not a bijection of the signed index set, or is malformed.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// Some orbit of the map misses the negation of one of its elements.
class NotAChart : public Error {
 public:
  explicit NotAChart(int witness)
      : Error("not a chart: the orbit of " + std::to_string(witness) + " does not contain " +
              std::to_string(-witness)),
        witness_(witness) {}
  int witness() const noexcept { return witness_; }

 private:
  int witness_;
};

class InvalidSemichart : public Error {
 public:
  using Error::Error;
};

class NotStraight : public Error {
 public:
  NotStraight() : Error("chart is not straight") {}
};

class NotFullWord : public Error {
 public:
  NotFullWord() : Error("word is not full: some alphabet letter does not occur") {}
};

class NotOddWord : public Error {
 public:
  NotOddWord() : Error("word is not odd: some letter occurs unmarked an even number of times") {}
};

/// A letter occurs only with '+', so no chart has this word.
class NotRealizable : public Error {
 public:
  explicit NotRealizable(const std::string& letter)
      : Error("word is not realizable: letter '" + letter + "' never occurs without '+'") {}
};

/// An unsigned-word operation received a word containing '+'.
class SPresent : public Error {
 public:
  SPresent() : Error("word contains '+' marks; an unsigned word is required") {}
};

class NotCoprime : public Error {
 public:
  NotCoprime(int p, int n)
      : Error("christoffel word needs coprime 1 <= p <= n, got p=" + std::to_string(p) +
              ", n=" + std::to_string(n)) {}
};

class UnknownOrbit : public Error {
 public:
  explicit UnknownOrbit(int id) : Error("no orbit with id " + std::to_string(id)) {}
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(int n, int bound)
      : Error("profile size n=" + std::to_string(n) + " exceeds the census bound " +
              std::to_string(bound)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computed quantity violated an invariant that holds for every valid input.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace chartlab
