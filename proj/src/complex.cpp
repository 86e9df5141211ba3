#include "topochar/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cassert>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "topochar/errors.hpp"

namespace topochar {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Compressed rows: row i is values[offsets[i] .. offsets[i+1]).
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> values;

  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return {values.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// PackedSimplices

PackedSimplices::PackedSimplices(std::span<const Simplex> simplices,
                                 std::span<const VertexId> vertices) {
  stride_ = std::max<std::size_t>(1, (vertices.size() + 63) / 64);
  data_.assign(simplices.size() * stride_, 0);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::uint64_t* r = data_.data() + i * stride_;
    for (VertexId v : simplices[i].vertices()) {
      auto rank = static_cast<std::size_t>(
          std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
      r[rank / 64] |= std::uint64_t{1} << (rank % 64);
    }
  }
  std::size_t capacity = std::bit_ceil(std::max<std::size_t>(4, simplices.size() * 2));
  slots_.assign(capacity, 0);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::size_t s = hash(row(i)) & (capacity - 1);
    while (slots_[s] != 0) s = (s + 1) & (capacity - 1);
    slots_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

std::size_t PackedSimplices::hash(const std::uint64_t* mask) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::size_t w = 0; w < stride_; ++w) h = mix64(h ^ mask[w]);
  return static_cast<std::size_t>(h);
}

bool PackedSimplices::is_face(std::size_t i, std::size_t j) const noexcept {
  const std::uint64_t* a = row(i);
  const std::uint64_t* b = row(j);
  for (std::size_t w = 0; w < stride_; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

bool PackedSimplices::meets(std::size_t i, std::size_t j) const noexcept {
  const std::uint64_t* a = row(i);
  const std::uint64_t* b = row(j);
  for (std::size_t w = 0; w < stride_; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

std::optional<std::uint32_t> PackedSimplices::find(const std::uint64_t* mask) const noexcept {
  if (slots_.empty()) return std::nullopt;
  const std::size_t cap = slots_.size();
  for (std::size_t s = hash(mask) & (cap - 1);; s = (s + 1) & (cap - 1)) {
    std::uint32_t slot = slots_[s];
    if (slot == 0) return std::nullopt;
    if (std::equal(mask, mask + stride_, row(slot - 1))) return slot - 1;
  }
}

// ---------------------------------------------------------------------------
// Complex

struct Complex::Body {
  std::vector<Simplex> simplices;
  std::vector<VertexId> vertices;
  PackedSimplices packed;
  Csr cofaces;
  Csr faces;
  int dimension = -1;
};

Complex::Complex() {
  static const auto body = std::make_shared<const Body>();
  data_ = body;
}

Complex Complex::adopt_canonical(std::vector<Simplex> simplices) {
  assert(std::is_sorted(simplices.begin(), simplices.end()));
  if (simplices.empty()) return Complex();
  auto body = std::make_shared<Body>();
  body->simplices = std::move(simplices);
  const auto& sx = body->simplices;

  for (const Simplex& x : sx)
    if (x.size() == 1) body->vertices.push_back(x.front());
  std::sort(body->vertices.begin(), body->vertices.end());
  body->dimension = sx.back().dim();
  body->packed = PackedSimplices(sx, body->vertices);

  // Every nonempty vertex subset of every simplex, located through the hash
  // index. This fills the face lists and, transposed, the coface lists.
  const std::size_t n = sx.size();
  const std::size_t stride = body->packed.stride();
  std::vector<std::size_t> coface_count(n, 0);
  Csr& faces = body->faces;
  faces.offsets.reserve(n + 1);
  std::vector<std::uint64_t> mask(stride);
  std::vector<std::size_t> ranks;
  for (std::size_t j = 0; j < n; ++j) {
    ranks.clear();
    for (VertexId v : sx[j].vertices())
      ranks.push_back(static_cast<std::size_t>(
          std::lower_bound(body->vertices.begin(), body->vertices.end(), v) -
          body->vertices.begin()));
    const std::size_t s = ranks.size();
    if (s >= 63) throw ResourceError("simplex too large to enumerate faces", n);
    const std::size_t begin = faces.values.size();
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << s); ++sub) {
      std::fill(mask.begin(), mask.end(), 0);
      for (std::size_t b = 0; b < s; ++b)
        if (sub >> b & 1) mask[ranks[b] / 64] |= std::uint64_t{1} << (ranks[b] % 64);
      auto idx = body->packed.find(mask.data());
      if (!idx) throw InputError("family is not closed: missing a face of " + sx[j].to_string());
      faces.values.push_back(*idx);
      ++coface_count[*idx];
    }
    std::sort(faces.values.begin() + static_cast<std::ptrdiff_t>(begin), faces.values.end());
    faces.offsets.push_back(faces.values.size());
  }

  Csr& cof = body->cofaces;
  cof.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) cof.offsets[i + 1] = cof.offsets[i] + coface_count[i];
  cof.values.resize(cof.offsets[n]);
  std::vector<std::size_t> fill(cof.offsets.begin(), cof.offsets.end() - 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::uint32_t i : faces.row(j)) cof.values[fill[i]++] = static_cast<std::uint32_t>(j);

  return Complex(std::move(body));
}

Complex Complex::from_simplices(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  if (!is_complex(simplices)) throw InputError("family is not closed under nonempty subsets");
  return adopt_canonical(std::move(simplices));
}

std::size_t Complex::size() const noexcept { return data_->simplices.size(); }

const Simplex& Complex::operator[](std::size_t i) const noexcept { return data_->simplices[i]; }

std::span<const Simplex> Complex::simplices() const noexcept { return data_->simplices; }

std::optional<std::uint32_t> Complex::index_of(const Simplex& x) const {
  const auto& sx = data_->simplices;
  auto it = std::lower_bound(sx.begin(), sx.end(), x);
  if (it == sx.end() || *it != x) return std::nullopt;
  return static_cast<std::uint32_t>(it - sx.begin());
}

std::span<const VertexId> Complex::vertices() const noexcept { return data_->vertices; }

int Complex::dimension() const noexcept { return data_->dimension; }

const PackedSimplices& Complex::packed() const noexcept { return data_->packed; }

std::span<const std::uint32_t> Complex::cofaces(std::uint32_t i) const noexcept {
  return data_->cofaces.row(i);
}

std::span<const std::uint32_t> Complex::faces(std::uint32_t i) const noexcept {
  return data_->faces.row(i);
}

bool operator==(const Complex& a, const Complex& b) {
  return a.same_body(b) || std::ranges::equal(a.simplices(), b.simplices());
}

// ---------------------------------------------------------------------------
// Construction helpers

namespace {

void add_all_faces(const Simplex& g, std::unordered_set<Simplex, SimplexHash>& seen,
                   std::uint64_t budget) {
  auto vs = g.vertices();
  const std::size_t s = vs.size();
  if (s >= 63) throw ResourceError("simplex too large to close", seen.size());
  std::vector<VertexId> sub;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s); ++bits) {
    sub.clear();
    for (std::size_t b = 0; b < s; ++b)
      if (bits >> b & 1) sub.push_back(vs[b]);
    seen.emplace(sub);
    if (seen.size() > budget) throw ResourceError("simplex budget exceeded", seen.size());
  }
}

Complex closure_budgeted(std::vector<Simplex> generators, std::uint64_t budget) {
  std::sort(generators.begin(), generators.end(),
            [](const Simplex& a, const Simplex& b) { return b < a; });
  std::unordered_set<Simplex, SimplexHash> seen;
  for (const Simplex& g : generators) {
    // Everything collected so far is closed, so a present generator brings
    // nothing new.
    if (seen.contains(g)) continue;
    add_all_faces(g, seen, budget);
  }
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return Complex::adopt_canonical(std::move(out));
}

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t popcount_and(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

// Bron-Kerbosch with Tomita pivoting over bitset neighbourhoods.
class MaximalCliques {
 public:
  MaximalCliques(std::vector<Bits> adjacency, std::span<const VertexId> labels,
                 std::uint64_t budget)
      : adj_(std::move(adjacency)), labels_(labels), budget_(budget) {}

  std::vector<Simplex> run() {
    const std::size_t n = labels_.size();
    const std::size_t words = (n + 63) / 64;
    Bits p(words, 0), x(words, 0);
    for (std::size_t v = 0; v < n; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> r;
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  void expand(std::vector<std::size_t>& r, Bits& p, Bits& x) {
    if (!any(p)) {
      if (!any(x)) emit(r);
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (const Bits* side : {&p, &x}) {
      for (std::size_t w = 0; w < side->size(); ++w) {
        for (std::uint64_t word = (*side)[w]; word; word &= word - 1) {
          std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
          std::size_t c = popcount_and(p, adj_[u]);
          if (!have || c > best) {
            pivot = u;
            best = c;
            have = true;
          }
        }
      }
    }
    Bits candidates = p;
    for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= ~adj_[pivot][w];
    for (std::size_t w = 0; w < candidates.size(); ++w) {
      for (std::uint64_t word = candidates[w]; word; word &= word - 1) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        Bits p2 = p, x2 = x;
        for (std::size_t k = 0; k < p2.size(); ++k) {
          p2[k] &= adj_[v][k];
          x2[k] &= adj_[v][k];
        }
        r.push_back(v);
        expand(r, p2, x2);
        r.pop_back();
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }

  void emit(const std::vector<std::size_t>& r) {
    // A clique of size s alone contributes 2^s - 1 simplices.
    if (r.size() >= 63 || (std::uint64_t{1} << r.size()) - 1 > budget_)
      throw ResourceError("simplex budget exceeded", budget_);
    std::vector<VertexId> vs;
    vs.reserve(r.size());
    for (std::size_t v : r) vs.push_back(labels_[v]);
    out_.emplace_back(std::move(vs));
  }

  std::vector<Bits> adj_;
  std::span<const VertexId> labels_;
  std::uint64_t budget_;
  std::vector<Simplex> out_;
};

}  // namespace

Complex closure(std::span<const Simplex> generators) {
  return closure_budgeted(std::vector<Simplex>(generators.begin(), generators.end()),
                          std::numeric_limits<std::uint64_t>::max());
}

bool is_complex(std::span<const Simplex> family) {
  std::unordered_set<Simplex, SimplexHash> members(family.begin(), family.end());
  for (const Simplex& x : family) {
    if (x.size() < 2) continue;
    // Closure under codimension-one faces implies closure under all faces.
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!members.contains(without_vertex(x, i))) return false;
  }
  return true;
}

Complex whitney(std::span<const VertexId> vertices, std::span<const Edge> edges,
                std::uint64_t simplex_budget) {
  std::vector<VertexId> labels(vertices.begin(), vertices.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::size_t n = labels.size();
  const std::size_t words = (n + 63) / 64;
  auto rank_of = [&](VertexId v) -> std::size_t {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v)
      throw InputError("edge references unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<Bits> adj(n, Bits(words, 0));
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self loop at vertex " + std::to_string(u));
    std::size_t a = rank_of(u), b = rank_of(v);
    adj[a][b / 64] |= std::uint64_t{1} << (b % 64);
    adj[b][a / 64] |= std::uint64_t{1} << (a % 64);
  }
  if (n == 0) return Complex();
  auto maximal = MaximalCliques(std::move(adj), labels, simplex_budget).run();
  return closure_budgeted(std::move(maximal), simplex_budget);
}

long long FVector::alternating_sum() const noexcept {
  long long s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[i]);
  return s;
}

std::size_t FVector::total() const noexcept {
  std::size_t s = 0;
  for (std::size_t c : counts) s += c;
  return s;
}

FVector f_vector(const Complex& g) {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(g.dimension() + 1), 0);
  for (const Simplex& x : g) ++f.counts[static_cast<std::size_t>(x.dim())];
  return f;
}

std::vector<Simplex> facets(const Complex& g) {
  std::vector<Simplex> out;
  for (std::uint32_t i = 0; i < g.size(); ++i)
    if (g.cofaces(i).size() == 1) out.push_back(g[i]);
  return out;
}

Complex join(const Complex& g, const Complex& h, JoinLabels labels) {
  auto gv = g.vertices();
  auto hv = h.vertices();
  std::vector<VertexId> common;
  std::set_intersection(gv.begin(), gv.end(), hv.begin(), hv.end(), std::back_inserter(common));
  Complex right = h;
  if (!common.empty()) {
    if (labels == JoinLabels::kStrict)
      throw InputError("join operands share vertex " + std::to_string(common.front()));
    const VertexId offset = gv.back() + 1;
    right = relabel(h, [offset](VertexId v) { return v + offset; });
  }
  std::vector<Simplex> out(g.begin(), g.end());
  out.insert(out.end(), right.begin(), right.end());
  for (const Simplex& x : g)
    for (const Simplex& y : right) out.push_back(set_union(x, y));
  std::sort(out.begin(), out.end());
  return Complex::adopt_canonical(std::move(out));
}

Complex relabel(const Complex& g, const std::function<VertexId(VertexId)>& map) {
  std::unordered_map<VertexId, VertexId> image;
  std::unordered_set<VertexId> used;
  for (VertexId v : g.vertices()) {
    VertexId w = map(v);
    if (!used.insert(w).second) throw InputError("relabelling is not injective");
    image.emplace(v, w);
  }
  std::vector<Simplex> out;
  out.reserve(g.size());
  for (const Simplex& x : g) {
    std::vector<VertexId> vs;
    vs.reserve(x.size());
    for (VertexId v : x.vertices()) vs.push_back(image.at(v));
    out.emplace_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return Complex::adopt_canonical(std::move(out));
}

}  // namespace topochar
