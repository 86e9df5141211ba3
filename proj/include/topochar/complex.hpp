#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topochar/simplex.hpp"

namespace topochar {

/// Simplex-count limit applied by whitney() unless the caller passes another.
inline constexpr std::uint64_t kDefaultSimplexBudget = 50'000'000;

/**
 * Vertex bitsets for every simplex of a complex, one row of `stride()` words
 * per simplex, plus a hash index from bitset to simplex position.
 *
 * Bit `r` of a row is set when the simplex contains the vertex of rank `r` in
 * the complex's sorted vertex list.
 */
class PackedSimplices {
 public:
  PackedSimplices() = default;
  PackedSimplices(std::span<const Simplex> simplices, std::span<const VertexId> vertices);

  std::size_t stride() const noexcept { return stride_; }
  const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * stride_; }

  /// Simplex i is a face of simplex j.
  bool is_face(std::size_t i, std::size_t j) const noexcept;
  bool meets(std::size_t i, std::size_t j) const noexcept;

  /// Position of the simplex whose bitset equals `mask` (stride() words).
  std::optional<std::uint32_t> find(const std::uint64_t* mask) const noexcept;

 private:
  std::size_t hash(const std::uint64_t* mask) const noexcept;

  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint32_t> slots_;  // open addressing, position + 1, 0 = empty
};

/**
 * A finite abstract simplicial complex: a family of simplices closed under
 * nonempty subsets, held in canonical order (dimension, then lexicographic).
 *
 * Complex is an immutable value with a shared body; copies are cheap and safe
 * to hand to other threads. The default-constructed complex is the void, the
 * empty complex.
 */
class Complex {
 public:
  Complex();

  /// Validating constructor. Sorts and deduplicates; throws InputError if the
  /// family is not closed under nonempty subsets.
  static Complex from_simplices(std::vector<Simplex> simplices);

  /// Trusted constructor: `simplices` must already be canonical, duplicate
  /// free, and closed.
  static Complex adopt_canonical(std::vector<Simplex> simplices);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const Simplex& operator[](std::size_t i) const noexcept;
  std::span<const Simplex> simplices() const noexcept;
  auto begin() const noexcept { return simplices().begin(); }
  auto end() const noexcept { return simplices().end(); }

  std::optional<std::uint32_t> index_of(const Simplex& x) const;
  bool contains(const Simplex& x) const { return index_of(x).has_value(); }

  /// Sorted vertex ids.
  std::span<const VertexId> vertices() const noexcept;

  /// Largest simplex dimension; -1 for the void.
  int dimension() const noexcept;

  const PackedSimplices& packed() const noexcept;

  /// Positions of all simplices containing simplex i (its star), ascending.
  std::span<const std::uint32_t> cofaces(std::uint32_t i) const noexcept;

  /// Positions of all nonempty faces of simplex i (its core), ascending.
  std::span<const std::uint32_t> faces(std::uint32_t i) const noexcept;

  /// True when both handles share one body.
  bool same_body(const Complex& other) const noexcept { return data_ == other.data_; }

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  struct Body;
  explicit Complex(std::shared_ptr<const Body> body) : data_(std::move(body)) {}

  std::shared_ptr<const Body> data_;
};

/// Smallest complex containing every generator.
Complex closure(std::span<const Simplex> generators);
inline Complex closure(std::initializer_list<Simplex> generators) {
  return closure(std::span<const Simplex>(generators.begin(), generators.size()));
}

/// Closed under nonempty subsets (the empty family counts).
bool is_complex(std::span<const Simplex> family);

using Edge = std::pair<VertexId, VertexId>;

/// Whitney (clique) complex of a graph. Throws InputError for edges touching
/// unlisted vertices or self loops, ResourceError once more than
/// `simplex_budget` simplices would be produced.
Complex whitney(std::span<const VertexId> vertices, std::span<const Edge> edges,
                std::uint64_t simplex_budget = kDefaultSimplexBudget);

/// Simplex counts per dimension: counts[i] = number of i-simplices.
struct FVector {
  std::vector<std::size_t> counts;

  /// f_0 - f_1 + f_2 - ...
  long long alternating_sum() const noexcept;
  std::size_t total() const noexcept;

  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const Complex& g);

/// Maximal simplices in canonical order.
std::vector<Simplex> facets(const Complex& g);

enum class JoinLabels {
  kStrict,  ///< overlapping vertex ids are an InputError
  kOffset,  ///< on overlap, shift the right operand's ids past max id of the left
};

/// G + H = G ∪ H ∪ { x ∪ y : x ∈ G, y ∈ H }.
Complex join(const Complex& g, const Complex& h, JoinLabels labels = JoinLabels::kStrict);

/// Applies an injective vertex map; InputError if two vertices collide.
Complex relabel(const Complex& g, const std::function<VertexId(VertexId)>& map);

}  // namespace topochar
