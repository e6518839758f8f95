#pragma once

#include <stdexcept>
#include <string>

namespace eqvb {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table fails one of the group axioms.
class NotAGroupError : public Error {
 public:
  NotAGroupError(std::string axiom, const std::string& detail)
      : Error("not a group (" + axiom + "): " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Input exceeds an enumeration bound.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// A subgroup required to be normal is not.
class NotNormalError : public Error {
 public:
  using Error::Error;
};

/// A numerical splitting did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A character inner product failed to round to an integer.
class NonIntegralMultiplicityError : public Error {
 public:
  using Error::Error;
};

/// A fiber spec contains the trivial irreducible with nonzero multiplicity.
class TrivialComponentError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different models were combined.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

class SingularBlockError : public Error {
 public:
  using Error::Error;
};

/// No invertible intertwiner exists for the requested base translation.
class NoInvertibleIntertwinerError : public Error {
 public:
  using Error::Error;
};

/// Transition data whose discrete parts cannot be aligned across components.
class NotCompatibleError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of the operation fails on the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An automorphism mixes fiber blocks, so per-component restriction is undefined.
class BlockMixingError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable input file.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqvb
