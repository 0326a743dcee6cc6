#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alpha_spectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its domain.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input (graph6, edge lists, fractions).
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// A linear system or matrix inverse does not exist.
class SingularError : public Error {
  public:
    using Error::Error;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const { return residual_; }

  private:
    double residual_;
};

/// An exact identity that must hold failed; indicates a bug, never bad input.
class InconsistencyError : public Error {
  public:
    using Error::Error;
};

}  // namespace alpha_spectra
