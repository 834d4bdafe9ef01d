#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcas {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, parse failure, bad index.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible") {}
  using Error::Error;
};

/// A proposed automorphism fails to preserve the structure.
/// `witness` holds the basis indices at which preservation breaks.
class NotAutomorphism : public Error {
 public:
  NotAutomorphism(const std::string& what, std::vector<std::size_t> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// A linear map that does not commute with the automorphisms of its source
/// and target.
class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Product of graded components whose degrees sum past the truncation.
class DegreeOverflow : public Error {
 public:
  DegreeOverflow(std::size_t left, std::size_t right, std::size_t bound)
      : Error("degree overflow: " + std::to_string(left) + " + " + std::to_string(right) +
              " exceeds " + std::to_string(bound)),
        left_(left),
        right_(right) {}
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what, std::vector<std::size_t> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homcas
