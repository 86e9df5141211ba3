#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "topochar/complex.hpp"

namespace topochar {

using Membership = boost::dynamic_bitset<std::uint64_t>;

/**
 * An arbitrary sub-collection of the simplices of an ambient complex, held as
 * a membership bitmap over the ambient's canonical positions.
 *
 * No closure requirement: open sets, closed sets and everything in between
 * are SimplexSubsets. Binary operations require one ambient complex.
 */
class SimplexSubset {
 public:
  /// Empty subset of the void.
  SimplexSubset() = default;

  /// Throws DomainError if the bitmap length differs from the ambient size.
  SimplexSubset(Complex ambient, Membership members);

  /// Throws DomainError on positions outside the ambient.
  static SimplexSubset from_indices(Complex ambient, std::span<const std::uint32_t> indices);

  /// Throws DomainError if some simplex is not in the ambient.
  static SimplexSubset of(Complex ambient, std::span<const Simplex> simplices);

  static SimplexSubset all(Complex ambient);
  static SimplexSubset none(Complex ambient);

  const Complex& ambient() const noexcept { return ambient_; }
  const Membership& members() const noexcept { return members_; }

  std::size_t size() const noexcept { return members_.count(); }
  bool empty() const noexcept { return members_.none(); }

  bool contains_index(std::uint32_t i) const noexcept { return i < members_.size() && members_[i]; }
  bool contains(const Simplex& x) const;

  /// Ambient positions of the members, ascending.
  std::vector<std::uint32_t> indices() const;
  std::vector<Simplex> simplices() const;

  friend SimplexSubset operator|(const SimplexSubset& a, const SimplexSubset& b);
  friend SimplexSubset operator&(const SimplexSubset& a, const SimplexSubset& b);
  friend SimplexSubset operator-(const SimplexSubset& a, const SimplexSubset& b);

  /// Complement within the ambient.
  SimplexSubset complement() const;

  friend bool operator==(const SimplexSubset& a, const SimplexSubset& b);

 private:
  Complex ambient_;
  Membership members_;
};

/// Closed under nonempty subsets, i.e. a subcomplex.
bool is_closed(const SimplexSubset& a);

/// Upward closed in the ambient complex.
bool is_open(const SimplexSubset& a);

/// Smallest closed subset of the ambient containing `a`.
SimplexSubset closure(const SimplexSubset& a);

/// closure(a) minus a.
SimplexSubset boundary_set(const SimplexSubset& a);

/// Members as a standalone complex. Throws DomainError unless closed.
Complex to_complex(const SimplexSubset& a);

/// Complex formed by the members; caller guarantees closedness.
Complex subcomplex(const Complex& ambient, const Membership& members);

/// Throws DomainError unless both subsets live in the same ambient.
void require_same_ambient(const SimplexSubset& a, const SimplexSubset& b);

}  // namespace topochar
