#include "topochar/generators.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "topochar/errors.hpp"

namespace topochar {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) noexcept {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return r % n;
}

namespace {

std::vector<VertexId> one_to(int n) {
  std::vector<VertexId> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), VertexId{1});
  return v;
}

}  // namespace

Complex simplex_complex(int n) {
  if (n < 1) throw InputError("simplex needs n >= 1");
  return closure({Simplex(one_to(n))});
}

Complex cycle(int n) {
  if (n < 4) throw InputError("cycle needs n >= 4");
  std::vector<Simplex> edges;
  for (int i = 1; i <= n; ++i)
    edges.push_back(Simplex{static_cast<VertexId>(i), static_cast<VertexId>(i % n + 1)});
  return closure(edges);
}

Complex cross_polytope(int d) {
  if (d < -1) throw InputError("cross-polytope needs d >= -1");
  Complex out;
  for (int i = 0; i <= d; ++i) {
    const auto a = static_cast<VertexId>(2 * i + 1);
    out = join(out, closure({Simplex{a}, Simplex{a + 1}}));
  }
  return out;
}

Complex star_graph(int n) {
  if (n < 1) throw InputError("star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 2; i <= n; ++i) edges.emplace_back(1, static_cast<VertexId>(i));
  return whitney(one_to(n), edges);
}

Complex path3() { return closure({Simplex{1, 2}, Simplex{2, 3}}); }

Complex random_whitney(int n, int edges, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  const long long universe = static_cast<long long>(n) * (n - 1) / 2;
  if (edges < 0 || edges > universe) throw InputError("edge count out of range");
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(edges); ++i) {
    const std::size_t j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(static_cast<std::size_t>(edges));
  return whitney(one_to(n), all);
}

SimplexSubset random_open_set(const Complex& g, SplitMix64& rng, int max_stars) {
  Membership m(g.size());
  if (g.empty()) return SimplexSubset(g, m);
  const auto count = rng.below(static_cast<std::uint64_t>(max_stars) + 1);
  for (std::uint64_t s = 0; s < count; ++s) {
    const auto x = static_cast<std::uint32_t>(rng.below(g.size()));
    for (std::uint32_t c : g.cofaces(x)) m.set(c);
  }
  return SimplexSubset(g, std::move(m));
}

Complex generate(const GeneratorSpec& s) {
  if (s.kind == "simplex") return simplex_complex(s.n);
  if (s.kind == "cycle") return cycle(s.n);
  if (s.kind == "cross-polytope") return cross_polytope(s.d);
  if (s.kind == "octahedron") return octahedron();
  if (s.kind == "star") return star_graph(s.n);
  if (s.kind == "path3") return path3();
  if (s.kind == "random") return random_whitney(s.n, s.edges, s.seed);
  throw InputError("unknown generator kind '" + s.kind + "'");
}

}  // namespace topochar
