#include "topochar/simplex.hpp"

#include <algorithm>
#include <cassert>

#include "topochar/errors.hpp"

namespace topochar {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("repeated vertex in simplex");
}

bool Simplex::contains(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const noexcept {
  return size() <= other.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::meets(const Simplex& other) const noexcept {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::optional<Simplex> intersection(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> common;
  std::set_intersection(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                        b.vertices_.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return Simplex(Simplex::Sorted{}, std::move(common));
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> all;
  all.reserve(a.size() + b.size());
  std::set_union(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(), b.vertices_.end(),
                 std::back_inserter(all));
  return Simplex(Simplex::Sorted{}, std::move(all));
}

Simplex without_vertex(const Simplex& x, std::size_t position) {
  assert(x.size() >= 2 && position < x.size());
  std::vector<VertexId> rest;
  rest.reserve(x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != position) rest.push_back(x.vertices_[i]);
  return Simplex(Simplex::Sorted{}, std::move(rest));
}

std::size_t SimplexHash::operator()(const Simplex& x) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ x.size();
  for (VertexId v : x.vertices()) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace topochar
