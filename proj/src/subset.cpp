#include "topochar/subset.hpp"

#include "topochar/errors.hpp"

namespace topochar {

SimplexSubset::SimplexSubset(Complex ambient, Membership members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  if (members_.size() != ambient_.size())
    throw DomainError("membership bitmap does not match the ambient complex");
}

SimplexSubset SimplexSubset::from_indices(Complex ambient, std::span<const std::uint32_t> indices) {
  Membership m(ambient.size());
  for (std::uint32_t i : indices) {
    if (i >= m.size()) throw DomainError("simplex position outside the ambient complex");
    m.set(i);
  }
  return SimplexSubset(std::move(ambient), std::move(m));
}

SimplexSubset SimplexSubset::of(Complex ambient, std::span<const Simplex> simplices) {
  Membership m(ambient.size());
  for (const Simplex& x : simplices) {
    auto i = ambient.index_of(x);
    if (!i) throw DomainError(x.to_string() + " is not in the ambient complex");
    m.set(*i);
  }
  return SimplexSubset(std::move(ambient), std::move(m));
}

SimplexSubset SimplexSubset::all(Complex ambient) {
  Membership m(ambient.size());
  m.set();
  return SimplexSubset(std::move(ambient), std::move(m));
}

SimplexSubset SimplexSubset::none(Complex ambient) {
  Membership m(ambient.size());
  return SimplexSubset(std::move(ambient), std::move(m));
}

bool SimplexSubset::contains(const Simplex& x) const {
  auto i = ambient_.index_of(x);
  return i && members_[*i];
}

std::vector<std::uint32_t> SimplexSubset::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for (auto i = members_.find_first(); i != Membership::npos; i = members_.find_next(i))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<Simplex> SimplexSubset::simplices() const {
  std::vector<Simplex> out;
  for (std::uint32_t i : indices()) out.push_back(ambient_[i]);
  return out;
}

void require_same_ambient(const SimplexSubset& a, const SimplexSubset& b) {
  if (!(a.ambient() == b.ambient())) throw DomainError("subsets of different ambient complexes");
}

SimplexSubset operator|(const SimplexSubset& a, const SimplexSubset& b) {
  require_same_ambient(a, b);
  return SimplexSubset(a.ambient_, a.members_ | b.members_);
}

SimplexSubset operator&(const SimplexSubset& a, const SimplexSubset& b) {
  require_same_ambient(a, b);
  return SimplexSubset(a.ambient_, a.members_ & b.members_);
}

SimplexSubset operator-(const SimplexSubset& a, const SimplexSubset& b) {
  require_same_ambient(a, b);
  return SimplexSubset(a.ambient_, a.members_ - b.members_);
}

SimplexSubset SimplexSubset::complement() const { return SimplexSubset(ambient_, ~members_); }

bool operator==(const SimplexSubset& a, const SimplexSubset& b) {
  return a.ambient_ == b.ambient_ && a.members_ == b.members_;
}

bool is_closed(const SimplexSubset& a) {
  const Complex& g = a.ambient();
  for (std::uint32_t i : a.indices())
    for (std::uint32_t f : g.faces(i))
      if (!a.contains_index(f)) return false;
  return true;
}

bool is_open(const SimplexSubset& a) {
  const Complex& g = a.ambient();
  for (std::uint32_t i : a.indices())
    for (std::uint32_t c : g.cofaces(i))
      if (!a.contains_index(c)) return false;
  return true;
}

SimplexSubset closure(const SimplexSubset& a) {
  const Complex& g = a.ambient();
  Membership m(g.size());
  for (std::uint32_t i : a.indices())
    for (std::uint32_t f : g.faces(i)) m.set(f);
  return SimplexSubset(g, std::move(m));
}

SimplexSubset boundary_set(const SimplexSubset& a) { return closure(a) - a; }

Complex subcomplex(const Complex& ambient, const Membership& members) {
  // Ambient order is canonical, so any sub-sequence is canonical too.
  std::vector<Simplex> out;
  out.reserve(members.count());
  for (auto i = members.find_first(); i != Membership::npos; i = members.find_next(i))
    out.push_back(ambient[i]);
  return Complex::adopt_canonical(std::move(out));
}

Complex to_complex(const SimplexSubset& a) {
  if (!is_closed(a)) throw DomainError("subset is not closed");
  return subcomplex(a.ambient(), a.members());
}

}  // namespace topochar
