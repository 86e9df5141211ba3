#pragma once

#include <cstdint>
#include <string>

#include "topochar/complex.hpp"
#include "topochar/subset.hpp"

namespace topochar {

/// SplitMix64 (Steele, Lea, Flood). Increment 0x9E3779B97F4A7C15, output
/// mix multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::uint64_t state_;
};

/// Closure of {1..n}, n >= 1.
Complex simplex_complex(int n);

/// Cycle C_n on 1..n, n >= 4.
Complex cycle(int n);

/// Join of d+1 zero-spheres {2i+1, 2i+2}; the void for d = -1.
Complex cross_polytope(int d);

inline Complex octahedron() { return cross_polytope(2); }

/// Star graph on n vertices, center 1.
Complex star_graph(int n);

/// {1},{2},{3},{1,2},{2,3}
Complex path3();

/// Whitney complex of a uniform random graph on 1..n with exactly `edges`
/// edges: partial Fisher-Yates over the lexicographic edge list.
Complex random_whitney(int n, int edges, std::uint64_t seed);

/// Union of up to `max_stars` stars of uniformly chosen simplices (possibly
/// none, giving the empty open set).
SimplexSubset random_open_set(const Complex& g, SplitMix64& rng, int max_stars = 3);

struct GeneratorSpec {
  std::string kind;  ///< simplex, cycle, cross-polytope, octahedron, star, path3, random
  int n = 0;
  int edges = 0;
  int d = 0;
  std::uint64_t seed = 0;
};

/// Throws InputError for unknown kinds and invalid parameters.
Complex generate(const GeneratorSpec& spec);

}  // namespace topochar
