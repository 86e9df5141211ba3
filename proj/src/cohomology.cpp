#include "topochar/cohomology.hpp"

#include <algorithm>

#include "topochar/errors.hpp"

namespace topochar {

int incidence_sign(const Simplex& y, const Simplex& x) {
  if (y.size() != x.size() + 1 || !x.is_subset_of(y)) return 0;
  auto yv = y.vertices();
  auto xv = x.vertices();
  std::size_t p = 0;
  while (p < xv.size() && yv[p] == xv[p]) ++p;
  return p % 2 == 0 ? 1 : -1;
}

CochainSupport::CochainSupport(SimplexSubset s) : set_(std::move(s)) {
  open_ = topochar::is_open(set_);
  if (!open_ && !is_closed(set_)) throw DomainError("cochain support must be open or closed");
  const Complex& g = set_.ambient();
  for (std::uint32_t i : set_.indices()) {
    const auto d = static_cast<std::size_t>(g[i].dim());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(i);
  }
}

const std::vector<std::uint32_t>& CochainSupport::cells(int i) const {
  static const std::vector<std::uint32_t> none;
  if (i < 0 || i >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(i)];
}

namespace {

// Rows: positions in `rows`, columns: positions in `cols`, entries from the
// incidence of ambient simplices.
IntMatrix incidence_block(const Complex& g, const std::vector<std::uint32_t>& rows,
                          const std::vector<std::uint32_t>& cols) {
  IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& y = g[rows[r]];
    if (y.size() < 2) continue;
    for (std::size_t p = 0; p < y.size(); ++p) {
      auto f = g.index_of(without_vertex(y, p));
      auto it = std::lower_bound(cols.begin(), cols.end(), *f);
      if (it == cols.end() || *it != *f) continue;
      d(static_cast<Eigen::Index>(r), it - cols.begin()) = p % 2 == 0 ? 1 : -1;
    }
  }
  return d;
}

BettiVector from_ranks(const std::vector<std::size_t>& cells, const std::vector<std::size_t>& ranks) {
  // ranks[i] = rank of D_i
  BettiVector out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::size_t below = i == 0 ? 0 : ranks[i - 1];
    out.b.push_back(cells[i] - ranks[i] - below);
  }
  return out;
}

}  // namespace

IntMatrix coboundary(const CochainSupport& s, int i) {
  return incidence_block(s.subset().ambient(), s.cells(i + 1), s.cells(i));
}

long long BettiVector::euler() const noexcept {
  long long e = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    e += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(b[i]);
  return e;
}

BettiVector betti(const CochainSupport& s) {
  const int d = s.dimension();
  std::vector<std::size_t> cells, ranks;
  for (int i = 0; i <= d; ++i) {
    cells.push_back(s.cells(i).size());
    ranks.push_back(rank(coboundary(s, i)));
  }
  return from_ranks(cells, ranks);
}

BettiVector betti(const Complex& g) { return betti(CochainSupport(SimplexSubset::all(g))); }

BettiVector relative_betti(const SimplexSubset& u) {
  if (!is_open(u)) throw DomainError("subset is not open");
  const Complex& g = u.ambient();
  const CochainSupport whole(SimplexSubset::all(g));
  int d = -1;
  for (std::uint32_t i : u.indices()) d = std::max(d, g[i].dim());
  // A cochain vanishing on the complement lives on U's cells; its kernel
  // dimension is read off G's coboundary restricted to those columns.
  std::vector<std::size_t> cells, ranks;
  for (int i = 0; i <= d; ++i) {
    std::vector<std::uint32_t> cols;
    for (std::uint32_t c : whole.cells(i))
      if (u.contains_index(c)) cols.push_back(c);
    cells.push_back(cols.size());
    ranks.push_back(rank(incidence_block(g, whole.cells(i + 1), cols)));
  }
  return from_ranks(cells, ranks);
}

}  // namespace topochar
