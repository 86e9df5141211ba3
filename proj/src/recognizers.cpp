#include "topochar/recognizers.hpp"

#include <algorithm>

#include "topochar/errors.hpp"
#include "topochar/subset.hpp"
#include "topochar/topology.hpp"

namespace topochar {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::kYes: return "YES";
    case Answer::kNo: return "NO";
    case Answer::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

long long euler(const Complex& g) { return f_vector(g).alternating_sum(); }

long long sphere_euler(int d) { return d % 2 == 0 ? 2 : 0; }

// Vertex positions, smallest star first.
std::vector<std::uint32_t> vertex_order(const Complex& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.size() && g[i].size() == 1; ++i) out.push_back(i);
  std::stable_sort(out.begin(), out.end(), [&g](std::uint32_t a, std::uint32_t b) {
    return g.cofaces(a).size() < g.cofaces(b).size();
  });
  return out;
}

std::vector<std::uint32_t> every_simplex(const Complex& g) {
  std::vector<std::uint32_t> out(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) out[i] = i;
  return out;
}

Answer both(Answer a, Answer b) {
  if (a == Answer::kNo || b == Answer::kNo) return Answer::kNo;
  if (a == Answer::kUnknown || b == Answer::kUnknown) return Answer::kUnknown;
  return Answer::kYes;
}

Answer either(Answer a, Answer b) {
  if (a == Answer::kYes || b == Answer::kYes) return Answer::kYes;
  if (a == Answer::kUnknown || b == Answer::kUnknown) return Answer::kUnknown;
  return Answer::kNo;
}

Complex link(const Complex& g, std::uint32_t x) {
  const std::uint32_t one[] = {x};
  return sphere(g, one);
}

}  // namespace

Recognizer::Result Recognizer::run(Kind kind, const Complex& g, int d) {
  if (++calls_ > budget_) return {Answer::kUnknown, {}};
  auto key = std::make_tuple(static_cast<int>(kind), kind == Kind::kContractible ? 0 : d,
                             std::vector<Simplex>(g.begin(), g.end()));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Result r = eval(kind, g, d);
  if (r.answer != Answer::kUnknown) memo_.emplace(std::move(key), r);
  return r;
}

Recognizer::Result Recognizer::eval(Kind kind, const Complex& g, int d) {
  switch (kind) {
    case Kind::kContractible: return contractible_impl(g);
    case Kind::kSphere: return sphere_impl(g, d);
    case Kind::kBall: return ball_impl(g, d);
    case Kind::kManifold: return manifold_impl(g, d, false);
    case Kind::kBoundaryManifold: return manifold_impl(g, d, true);
    case Kind::kDehnSommerville: return dehn_sommerville_impl(g, d);
  }
  return {Answer::kUnknown, {}};
}

Recognizer::Result Recognizer::contractible_impl(const Complex& g) {
  if (g.empty() || euler(g) != 1) return {Answer::kNo, {}};
  const auto tops = facets(g);
  if (tops.size() == 1) {
    // A simplex is a cone; puncture vertices until one is left.
    auto vs = g.vertices();
    return {Answer::kYes, std::vector<VertexId>(vs.begin(), vs.end() - 1)};
  }
  bool unknown = false;
  for (std::uint32_t x : vertex_order(g)) {
    const Result s = run(Kind::kContractible, link(g, x), 0);
    if (s.answer == Answer::kNo) continue;
    const Result rest = run(Kind::kContractible, puncture(g, x), 0);
    if (s.answer == Answer::kYes && rest.answer == Answer::kYes) {
      std::vector<VertexId> trace{g[x].front()};
      trace.insert(trace.end(), rest.trace.begin(), rest.trace.end());
      return {Answer::kYes, std::move(trace)};
    }
    if (rest.answer != Answer::kNo) unknown = true;
  }
  return {unknown ? Answer::kUnknown : Answer::kNo, {}};
}

Recognizer::Result Recognizer::sphere_impl(const Complex& g, int d) {
  if (d < -1) return {Answer::kNo, {}};
  if (d == -1) return {g.empty() ? Answer::kYes : Answer::kNo, {}};
  if (g.dimension() != d || euler(g) != sphere_euler(d)) return {Answer::kNo, {}};
  const Result m = run(Kind::kManifold, g, d);
  if (m.answer != Answer::kYes) return {m.answer, {}};
  bool unknown = false;
  for (std::uint32_t x : vertex_order(g)) {
    const Result rest = run(Kind::kContractible, puncture(g, x), 0);
    if (rest.answer == Answer::kYes) return {Answer::kYes, {g[x].front()}};
    if (rest.answer == Answer::kUnknown) unknown = true;
  }
  return {unknown ? Answer::kUnknown : Answer::kNo, {}};
}

Recognizer::Result Recognizer::manifold_impl(const Complex& g, int d, bool allow_boundary) {
  if (d < 0 || g.dimension() != d) return {Answer::kNo, {}};
  Answer all = Answer::kYes;
  for (std::uint32_t x : every_simplex(g)) {
    const Complex s = link(g, x);
    Answer a = run(Kind::kSphere, s, d - 1).answer;
    if (allow_boundary && a != Answer::kYes) a = either(a, run(Kind::kBall, s, d - 1).answer);
    all = both(all, a);
    if (all == Answer::kNo) break;
  }
  return {all, {}};
}

Recognizer::Result Recognizer::ball_impl(const Complex& g, int d) {
  if (d < 0 || g.dimension() != d || euler(g) != 1) return {Answer::kNo, {}};
  Answer all = run(Kind::kBoundaryManifold, g, d).answer;
  if (all == Answer::kNo) return {all, {}};
  all = both(all, run(Kind::kContractible, g, 0).answer);
  if (all == Answer::kNo) return {all, {}};
  Membership on_boundary(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const Answer a = run(Kind::kBall, link(g, i), d - 1).answer;
    if (a == Answer::kUnknown) return {Answer::kUnknown, {}};
    if (a == Answer::kYes) on_boundary.set(i);
  }
  const Complex boundary = to_complex(closure(SimplexSubset(g, on_boundary)));
  return {both(all, run(Kind::kSphere, boundary, d - 1).answer), {}};
}

Recognizer::Result Recognizer::dehn_sommerville_impl(const Complex& g, int d) {
  if (d < -1) return {Answer::kNo, {}};
  if (d == -1) return {g.empty() ? Answer::kYes : Answer::kNo, {}};
  if (euler(g) != sphere_euler(d)) return {Answer::kNo, {}};
  Answer all = Answer::kYes;
  for (std::uint32_t x : every_simplex(g)) {
    all = both(all, run(Kind::kDehnSommerville, link(g, x), d - 1).answer);
    if (all == Answer::kNo) break;
  }
  return {all, {}};
}

Verdict Recognizer::top(Kind kind, const Complex& g, int d) {
  calls_ = 0;
  Result r = run(kind, g, d);
  return {r.answer, std::move(r.trace), calls_};
}

Verdict Recognizer::contractible(const Complex& g) { return top(Kind::kContractible, g, 0); }
Verdict Recognizer::sphere(const Complex& g, int d) { return top(Kind::kSphere, g, d); }
Verdict Recognizer::ball(const Complex& g, int d) { return top(Kind::kBall, g, d); }
Verdict Recognizer::manifold(const Complex& g, int d) { return top(Kind::kManifold, g, d); }
Verdict Recognizer::manifold_with_boundary(const Complex& g, int d) {
  return top(Kind::kBoundaryManifold, g, d);
}
Verdict Recognizer::dehn_sommerville(const Complex& g, int d) {
  return top(Kind::kDehnSommerville, g, d);
}

Complex Recognizer::manifold_boundary(const Complex& g, int d) {
  const Verdict certified = manifold_with_boundary(g, d);
  if (certified.answer == Answer::kUnknown)
    throw ResourceError("recognizer budget exhausted while certifying the manifold", certified.calls);
  if (!certified.yes()) throw DomainError("complex is not a manifold with boundary");
  Membership on_boundary(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const Verdict v = ball(link(g, i), d - 1);
    if (v.answer == Answer::kUnknown)
      throw ResourceError("recognizer budget exhausted while extracting the boundary", v.calls);
    if (v.yes()) on_boundary.set(i);
  }
  return to_complex(closure(SimplexSubset(g, on_boundary)));
}

Verdict is_contractible(const Complex& g, std::uint64_t budget) {
  return Recognizer(budget).contractible(g);
}
Verdict is_sphere(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).sphere(g, d);
}
Verdict is_ball(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).ball(g, d);
}
Verdict is_manifold(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).manifold(g, d);
}
Verdict is_manifold_with_boundary(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).manifold_with_boundary(g, d);
}
Verdict is_dehn_sommerville(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).dehn_sommerville(g, d);
}
Complex manifold_boundary(const Complex& g, int d, std::uint64_t budget) {
  return Recognizer(budget).manifold_boundary(g, d);
}

}  // namespace topochar
