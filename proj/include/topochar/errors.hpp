#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topochar {

/// Malformed input: unparseable files, invalid generator parameters,
/// overlapping vertex labels, duplicate monomials.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed: a simplex outside its ambient complex,
/// a set that should be open but is not, subsets of different ambients.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured work budget was exceeded. `partial()` reports how much work
/// (simplices, sets, tuples, calls; depends on the raising operation) was
/// completed before giving up.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t partial)
      : std::runtime_error(what), partial_(partial) {}

  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

/// Raised when an exact inverse is requested for a singular matrix.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace topochar
