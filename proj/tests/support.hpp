#pragma once

#include <vector>

#include "oracle.hpp"
#include "topochar/characteristics.hpp"
#include "topochar/generators.hpp"
#include "topochar/subset.hpp"

namespace testing {

// The seeded corpus: Whitney complexes of random graphs with 9 vertices and
// 15 edges, seeds 1..count.
inline std::vector<topochar::Complex> corpus(int count = 50) {
  std::vector<topochar::Complex> out;
  for (int s = 1; s <= count; ++s) out.push_back(topochar::random_whitney(9, 15, static_cast<std::uint64_t>(s)));
  return out;
}

// Each simplex kept with probability 1/2.
inline topochar::SimplexSubset random_subset(const topochar::Complex& g, topochar::SplitMix64& rng) {
  topochar::Membership m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m[i] = rng.below(2) == 1;
  return topochar::SimplexSubset(g, m);
}

inline oracle::Family family(const topochar::SimplexSubset& a) {
  oracle::Family f;
  for (const auto& x : a.simplices()) f.insert(oracle::Set(x.vertices().begin(), x.vertices().end()));
  return f;
}

inline std::vector<std::uint32_t> indices(const topochar::Complex& g) {
  std::vector<std::uint32_t> out(g.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace testing
