#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every torsim module.
 *
 * The CLI maps each family onto an exit code:
 *   InputError / PreconditionError -> 2
 *   UnsupportedRingError           -> 3
 *   ContradictionError             -> 1
 */

#include <stdexcept>
#include <string>

namespace torsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (mixed rings, wrong shapes, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input for which an operation's precondition fails
/// (infinite module handed to an enumerator, dimension bound exceeded).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// The ring or ideal shape lies outside what the exact algorithms cover.
class UnsupportedRingError : public Error {
 public:
  using Error::Error;
};

/// A statement that must hold for every valid input was observed to fail.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

}  // namespace torsim
