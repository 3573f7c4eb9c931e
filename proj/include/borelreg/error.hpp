#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borelreg {

/// Inputs violate a mathematical precondition (non-artinian ideal handed to
/// the socle scan, non-Borel-type ideal handed to the sequential chain, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An a-priori scan bound was reached without the certifying empty slice.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ambient variable counts of two operands disagree.
class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("ambient mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs) + " variables") {}
};

}  // namespace borelreg
