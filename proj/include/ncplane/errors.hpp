#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncplane {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The contracted one-form fails the integrability test; the field is not Hamiltonian.
class NonExactForm : public Error {
 public:
  using Error::Error;
};

/// Integration produced a NaN or infinity.
class NonFiniteState : public Error {
 public:
  using Error::Error;
};

/// A moment-map bracket that should be a constant depends on the coordinates.
class NonConstantBracket : public Error {
 public:
  using Error::Error;
};

/// Grid parameters violate N >= 16 power of two, L > 0, hbar > 0.
class InvalidGrid : public Error {
 public:
  using Error::Error;
};

/// A Gaussian would not fit inside the box with six widths of margin.
class TailOverflow : public Error {
 public:
  using Error::Error;
};

/// The reference state has (numerically) zero norm.
class PhaseUndefined : public Error {
 public:
  using Error::Error;
};

/// Malformed wavefunction file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace ncplane
