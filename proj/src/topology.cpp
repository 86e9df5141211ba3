#include "topochar/topology.hpp"

#include <deque>
#include <unordered_set>

#include "topochar/errors.hpp"

namespace topochar {

OpenSet::OpenSet(SimplexSubset s) : set_(std::move(s)) {
  if (!is_open(set_)) throw DomainError("subset is not open");
}

OpenSet trust_open(SimplexSubset s) { return OpenSet(OpenSet::Trusted{}, std::move(s)); }

Configuration configuration(const Complex& g, std::span<const Simplex> points) {
  if (points.empty()) throw InputError("a configuration needs at least one point");
  Configuration out;
  out.reserve(points.size());
  for (const Simplex& x : points) {
    auto i = g.index_of(x);
    if (!i) throw DomainError(x.to_string() + " is not in the complex");
    out.push_back(*i);
  }
  return out;
}

int configuration_sign(const Complex& g, std::span<const std::uint32_t> x) {
  int s = 1;
  for (std::uint32_t i : x) s *= g[i].sign();
  return s;
}

namespace {

void check_configuration(const Complex& g, std::span<const std::uint32_t> x) {
  if (x.empty()) throw InputError("a configuration needs at least one point");
  for (std::uint32_t i : x)
    if (i >= g.size()) throw DomainError("configuration point outside the complex");
}

Membership from_list(std::size_t n, std::span<const std::uint32_t> positions) {
  Membership m(n);
  for (std::uint32_t i : positions) m.set(i);
  return m;
}

}  // namespace

OpenSet star(const Complex& g, std::uint32_t x) {
  if (x >= g.size()) throw DomainError("simplex position outside the complex");
  return trust_open(SimplexSubset(g, from_list(g.size(), g.cofaces(x))));
}

OpenSet star(const Complex& g, const Simplex& x) {
  auto i = g.index_of(x);
  if (!i) throw DomainError(x.to_string() + " is not in the complex");
  return star(g, *i);
}

Complex core(const Complex& g, const Simplex& x) {
  auto i = g.index_of(x);
  if (!i) throw DomainError(x.to_string() + " is not in the complex");
  return subcomplex(g, from_list(g.size(), g.faces(*i)));
}

std::optional<std::uint32_t> union_position(const Complex& g, std::span<const std::uint32_t> x) {
  check_configuration(g, x);
  const PackedSimplices& p = g.packed();
  std::vector<std::uint64_t> mask(p.row(x[0]), p.row(x[0]) + p.stride());
  for (std::size_t j = 1; j < x.size(); ++j) {
    const std::uint64_t* r = p.row(x[j]);
    for (std::size_t w = 0; w < mask.size(); ++w) mask[w] |= r[w];
  }
  return p.find(mask.data());
}

OpenSet star_intersection(const Complex& g, std::span<const std::uint32_t> x) {
  // Every y containing all x_j contains their union; a closed G holds that
  // union exactly when some y does.
  auto u = union_position(g, x);
  if (!u) return trust_open(SimplexSubset::none(g));
  return star(g, *u);
}

OpenSet star_intersection_scan(const Complex& g, std::span<const std::uint32_t> x) {
  check_configuration(g, x);
  Membership m(g.size());
  for (std::uint32_t y = 0; y < g.size(); ++y) {
    bool all = true;
    for (std::uint32_t xi : x)
      if (!g.packed().is_face(xi, y)) {
        all = false;
        break;
      }
    if (all) m.set(y);
  }
  return trust_open(SimplexSubset(g, std::move(m)));
}

SimplexSubset ball_set(const Complex& g, std::span<const std::uint32_t> x) {
  return closure(star_intersection(g, x).subset());
}

SimplexSubset sphere_set(const Complex& g, std::span<const std::uint32_t> x) {
  const OpenSet u = star_intersection(g, x);
  return closure(u.subset()) - u.subset();
}

SimplexSubset dual_sphere_set(const Complex& g, std::span<const std::uint32_t> x) {
  check_configuration(g, x);
  const std::uint32_t first[] = {x[0]};
  SimplexSubset out = sphere_set(g, first);
  for (std::size_t j = 1; j < x.size(); ++j) {
    const std::uint32_t one[] = {x[j]};
    out = out & sphere_set(g, one);
  }
  return out;
}

Complex ball(const Complex& g, std::span<const std::uint32_t> x) {
  return subcomplex(g, ball_set(g, x).members());
}

Complex sphere(const Complex& g, std::span<const std::uint32_t> x) {
  return subcomplex(g, sphere_set(g, x).members());
}

Complex dual_sphere(const Complex& g, std::span<const std::uint32_t> x) {
  return subcomplex(g, dual_sphere_set(g, x).members());
}

Complex puncture(const Complex& g, std::uint32_t x) {
  return subcomplex(g, star(g, x).subset().complement().members());
}

std::vector<OpenSet> generate_topology(const Complex& g, std::uint64_t budget) {
  std::vector<Membership> base;
  for (std::uint32_t i = 0; i < g.size(); ++i) base.push_back(from_list(g.size(), g.cofaces(i)));

  std::unordered_set<Membership> seen;
  std::vector<Membership> found;
  std::deque<std::size_t> queue;
  auto add = [&](Membership m) {
    if (!seen.insert(m).second) return;
    if (seen.size() > budget) throw ResourceError("open set budget exceeded", budget);
    found.push_back(std::move(m));
    queue.push_back(found.size() - 1);
  };
  add(Membership(g.size()));
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const Membership& b : base)
      if (!b.is_subset_of(found[at])) add(found[at] | b);
  }

  std::vector<OpenSet> out;
  out.reserve(found.size());
  for (Membership& m : found) out.push_back(trust_open(SimplexSubset(g, std::move(m))));
  return out;
}

Complex barycentric(const Complex& g) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    vertices.push_back(i + 1);
    for (std::uint32_t f : g.faces(i))
      if (f != i) edges.emplace_back(f + 1, i + 1);
  }
  return whitney(vertices, edges);
}

OpenSet open_refinement(const SimplexSubset& u) {
  if (!is_open(u)) throw DomainError("subset is not open");
  const Complex g1 = barycentric(u.ambient());
  // A chain of G lies in (G minus U)_1 exactly when no link of it is in U.
  Membership m(g1.size());
  for (std::uint32_t i = 0; i < g1.size(); ++i)
    for (VertexId v : g1[i].vertices())
      if (u.contains_index(v - 1)) {
        m.set(i);
        break;
      }
  return trust_open(SimplexSubset(g1, std::move(m)));
}

}  // namespace topochar
