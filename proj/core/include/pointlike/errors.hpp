#ifndef POINTLIKE_ERRORS_HPP_
#define POINTLIKE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pointlike {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

// A multiplication table failed the associativity check; carries a witness
// triple with (x*y)*z != x*(y*z).
class AssociativityViolation : public Error {
 public:
  AssociativityViolation(unsigned x, unsigned y, unsigned z)
      : Error("associativity violation at triple (" + std::to_string(x) + ", "
              + std::to_string(y) + ", " + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  unsigned x, y, z;
};

// mu(k) was evaluated (or requested) with k not a pi'-number.
class NotPiPrimeOrder : public Error {
 public:
  explicit NotPiPrimeOrder(std::string const& msg) : Error(msg) {}
};

// Alias used at the power() surface, where the same condition is reported.
using InvalidExponent = NotPiPrimeOrder;

class SyntaxError : public Error {
 public:
  SyntaxError(std::string const& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class UnknownLetter : public Error {
 public:
  explicit UnknownLetter(std::string const& letter)
      : Error("letter '" + letter + "' is not in the alphabet"), letter(letter) {}
  std::string letter;
};

class NotCyclicGroup : public Error {
 public:
  explicit NotCyclicGroup(std::string const& msg) : Error(msg) {}
};

class NotInFamily : public Error {
 public:
  explicit NotInFamily(std::string const& msg) : Error(msg) {}
};

class FactorizationNotFound : public Error {
 public:
  explicit FactorizationNotFound(std::string const& msg) : Error(msg) {}
};

class IncompleteAutomaton : public Error {
 public:
  explicit IncompleteAutomaton(std::string const& msg) : Error(msg) {}
};

// The inputs of a reduction were falsified against the premise that they
// agree over the target pseudovariety.
class PreconditionFalsified : public Error {
 public:
  explicit PreconditionFalsified(std::string const& msg) : Error(msg) {}
};

class TowerUndetermined : public Error {
 public:
  explicit TowerUndetermined(std::string const& msg) : Error(msg) {}
};

class NotIdempotentLike : public Error {
 public:
  explicit NotIdempotentLike(std::string const& msg) : Error(msg) {}
};

// File and format problems of the CLI surfaces.
class IoError : public Error {
 public:
  explicit IoError(std::string const& msg) : Error(msg) {}
};

}  // namespace pointlike

#endif  // POINTLIKE_ERRORS_HPP_
