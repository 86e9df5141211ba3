#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace topochar {

using VertexId = std::uint32_t;

/**
 * A nonempty finite set of vertices, stored ascending.
 *
 * Simplices order canonically by cardinality first and lexicographically on
 * the sorted vertex list second; every complex in the library is kept in this
 * order so matrix rows and report listings are reproducible.
 */
class Simplex {
 public:
  Simplex(std::initializer_list<VertexId> vertices);

  /// Sorts the vertices. Throws InputError when empty or when a vertex repeats.
  explicit Simplex(std::vector<VertexId> vertices);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  /// (-1)^dim, the weight w(x) of the simplex.
  int sign() const noexcept { return (vertices_.size() % 2 == 1) ? 1 : -1; }

  VertexId front() const noexcept { return vertices_.front(); }
  VertexId back() const noexcept { return vertices_.back(); }

  bool contains(VertexId v) const noexcept;
  bool is_subset_of(const Simplex& other) const noexcept;
  bool meets(const Simplex& other) const noexcept;

  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  friend std::optional<Simplex> intersection(const Simplex&, const Simplex&);
  friend Simplex set_union(const Simplex&, const Simplex&);
  friend Simplex without_vertex(const Simplex&, std::size_t);

  std::vector<VertexId> vertices_;
};

/// Empty optional when the simplices are disjoint.
std::optional<Simplex> intersection(const Simplex& a, const Simplex& b);
Simplex set_union(const Simplex& a, const Simplex& b);

/// The facet obtained by dropping the vertex at `position`; `x` must have at
/// least two vertices.
Simplex without_vertex(const Simplex& x, std::size_t position);

struct SimplexHash {
  std::size_t operator()(const Simplex& x) const noexcept;
};

}  // namespace topochar
