#pragma once

#include <cstddef>
#include <vector>

#include "topochar/exact_linalg.hpp"
#include "topochar/subset.hpp"

namespace topochar {

/// 0 unless x is a codimension-one face of y; then (-1)^p with p the 0-based
/// position in y of the vertex y \ x.
int incidence_sign(const Simplex& y, const Simplex& x);

/// Support of a cochain complex: an open or a closed subset.
class CochainSupport {
 public:
  /// DomainError unless `s` is open or closed.
  explicit CochainSupport(SimplexSubset s);

  const SimplexSubset& subset() const noexcept { return set_; }
  bool is_open() const noexcept { return open_; }

  /// Largest member dimension, -1 when empty.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  /// Ambient positions of the i-dimensional members, ascending.
  const std::vector<std::uint32_t>& cells(int i) const;

 private:
  SimplexSubset set_;
  bool open_ = false;
  std::vector<std::vector<std::uint32_t>> by_dim_;
};

/// D_i: i-cochains to (i+1)-cochains on the support; rows are the
/// (i+1)-cells, columns the i-cells, both ascending.
IntMatrix coboundary(const CochainSupport& s, int i);

struct BettiVector {
  std::vector<std::size_t> b;  ///< b[i] for dimensions 0..d

  long long euler() const noexcept;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// b_i = dim ker D_i - rank D_{i-1} over the rationals.
BettiVector betti(const CochainSupport& s);
BettiVector betti(const Complex& g);

/// Betti vector of the cochains on the ambient G that vanish on the closed
/// complement of the open set `u`, computed from G's own coboundaries.
/// DomainError if `u` is not open.
BettiVector relative_betti(const SimplexSubset& u);

}  // namespace topochar
