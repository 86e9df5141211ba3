#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "topochar/complex.hpp"
#include "topochar/subset.hpp"

namespace topochar {

/// A SimplexSubset known to be upward closed in its ambient complex.
class OpenSet {
 public:
  OpenSet() = default;

  /// Throws DomainError if `s` is not open.
  explicit OpenSet(SimplexSubset s);

  const SimplexSubset& subset() const noexcept { return set_; }
  operator const SimplexSubset&() const noexcept { return set_; }
  const Complex& ambient() const noexcept { return set_.ambient(); }

  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  struct Trusted {};
  OpenSet(Trusted, SimplexSubset s) : set_(std::move(s)) {}
  friend OpenSet trust_open(SimplexSubset s);

  SimplexSubset set_;
};

/// Wraps without checking; for results that are open by construction.
OpenSet trust_open(SimplexSubset s);

/// A k-point configuration as ambient positions x_1..x_k (repeats allowed).
using Configuration = std::vector<std::uint32_t>;

/// Positions of the given simplices. Throws InputError when empty (k = 0) and
/// DomainError when a simplex is missing from `g`.
Configuration configuration(const Complex& g, std::span<const Simplex> points);
inline Configuration configuration(const Complex& g, std::initializer_list<Simplex> points) {
  return configuration(g, std::span<const Simplex>(points.begin(), points.size()));
}

/// w(X) = product of (-1)^dim x_j.
int configuration_sign(const Complex& g, std::span<const std::uint32_t> x);

/// U(x) = { y in G : x subset of y }. DomainError if x is not in G.
OpenSet star(const Complex& g, const Simplex& x);
OpenSet star(const Complex& g, std::uint32_t x);

/// K(x): all nonempty subsets of x. DomainError if x is not in G.
Complex core(const Complex& g, const Simplex& x);

/// Position of the union of the configuration, when that union is in G.
std::optional<std::uint32_t> union_position(const Complex& g, std::span<const std::uint32_t> x);

/// U(X) = intersection of the stars U(x_j), through U(X) = U(union X).
OpenSet star_intersection(const Complex& g, std::span<const std::uint32_t> x);

/// Same set by scanning every simplex of G with subset tests.
OpenSet star_intersection_scan(const Complex& g, std::span<const std::uint32_t> x);

/// B(X) = closure of U(X), S(X) = B(X) minus U(X), dual sphere = intersection
/// of the S(x_j). The *_set forms stay inside G.
SimplexSubset ball_set(const Complex& g, std::span<const std::uint32_t> x);
SimplexSubset sphere_set(const Complex& g, std::span<const std::uint32_t> x);
SimplexSubset dual_sphere_set(const Complex& g, std::span<const std::uint32_t> x);

Complex ball(const Complex& g, std::span<const std::uint32_t> x);
Complex sphere(const Complex& g, std::span<const std::uint32_t> x);
Complex dual_sphere(const Complex& g, std::span<const std::uint32_t> x);

inline Complex ball(const Complex& g, const Simplex& x) {
  return ball(g, configuration(g, {x}));
}
inline Complex sphere(const Complex& g, const Simplex& x) {
  return sphere(g, configuration(g, {x}));
}

/// G minus U(x) for a vertex or simplex x.
Complex puncture(const Complex& g, std::uint32_t x);

inline constexpr std::uint64_t kDefaultTopologyBudget = 1'000'000;

/// Every open set of G: the empty set plus all unions of stars, found
/// breadth first. Throws ResourceError (partial = sets found) once more than
/// `budget` sets exist.
std::vector<OpenSet> generate_topology(const Complex& g,
                                       std::uint64_t budget = kDefaultTopologyBudget);

/// G_1: Whitney complex of the inclusion graph on G. Simplex at position i of
/// G becomes vertex i + 1.
Complex barycentric(const Complex& g);

/// U_1 = G_1 minus (G minus U)_1, an open set of barycentric(G).
/// DomainError if `u` is not open.
OpenSet open_refinement(const SimplexSubset& u);

}  // namespace topochar
