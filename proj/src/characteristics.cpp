#include "topochar/characteristics.hpp"

#include <atomic>
#include <chrono>
#include <unordered_map>

#include <json.hpp>

#include "topochar/errors.hpp"
#include "topochar/parallel.hpp"

namespace topochar {

Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in characteristic", 0);
  return r;
}

Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in characteristic", 0);
  return r;
}

namespace {

void check_arity(int m) {
  if (m < 1) throw InputError("arity m must be at least 1");
}

// f_j(c) = signed count of j-tuples with running intersection c. Extending a
// tuple by x moves weight from c to c & x.
Value intersection_dp(const Complex& g, std::span<const std::vector<std::uint32_t>> slots,
                      const Membership* accept, EvalStats* stats) {
  const std::size_t n = g.size();
  if (n == 0 || slots.empty()) return 0;
  const PackedSimplices& p = g.packed();
  std::vector<Value> f(n, 0), next(n, 0);
  std::vector<std::uint32_t> active, next_active;
  std::vector<char> marked(n, 0);
  std::vector<std::uint64_t> mask(p.stride());
  std::uint64_t steps = 0;

  for (std::uint32_t x : slots[0]) {
    if (!marked[x]) active.push_back(x);
    marked[x] = 1;
    f[x] = checked_add(f[x], g[x].sign());
  }
  for (std::uint32_t c : active) marked[c] = 0;

  for (std::size_t j = 1; j < slots.size(); ++j) {
    next_active.clear();
    for (std::uint32_t c : active) {
      const Value fc = f[c];
      if (fc == 0) continue;
      for (std::uint32_t x : slots[j]) {
        ++steps;
        std::uint32_t target;
        if (p.is_face(c, x)) {
          target = c;
        } else if (p.is_face(x, c)) {
          target = x;
        } else {
          if (!p.meets(c, x)) continue;
          const std::uint64_t* a = p.row(c);
          const std::uint64_t* b = p.row(x);
          for (std::size_t w = 0; w < mask.size(); ++w) mask[w] = a[w] & b[w];
          target = *p.find(mask.data());
        }
        if (!marked[target]) {
          marked[target] = 1;
          next_active.push_back(target);
        }
        next[target] = checked_add(next[target], fc * g[x].sign());
      }
    }
    for (std::uint32_t c : active) f[c] = 0;
    for (std::uint32_t c : next_active) {
      marked[c] = 0;
      f[c] = next[c];
      next[c] = 0;
    }
    active.swap(next_active);
  }

  Value total = 0;
  for (std::uint32_t c : active)
    if (!accept || (*accept)[c]) total = checked_add(total, f[c]);
  if (stats) stats->tuples += steps;
  return total;
}

std::vector<std::uint32_t> all_positions(const Complex& g) {
  std::vector<std::uint32_t> out(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) out[i] = i;
  return out;
}

}  // namespace

Value characteristic(const SimplexSubset& a, int m, EvalStats* stats) {
  check_arity(m);
  std::vector<std::vector<std::uint32_t>> slots(static_cast<std::size_t>(m), a.indices());
  return intersection_dp(a.ambient(), slots, &a.members(), stats);
}

Value characteristic(const Complex& g, int m) {
  check_arity(m);
  std::vector<std::vector<std::uint32_t>> slots(static_cast<std::size_t>(m), all_positions(g));
  return intersection_dp(g, slots, nullptr, nullptr);
}

Value characteristic_naive(const SimplexSubset& a, int m, EvalStats* stats) {
  check_arity(m);
  const Complex& g = a.ambient();
  const std::vector<std::uint32_t> members = a.indices();
  if (members.empty()) return 0;
  const PackedSimplices& p = g.packed();
  const std::size_t stride = p.stride();
  const auto depth = static_cast<std::size_t>(m);
  // masks[j] holds the intersection of the first j+1 tuple entries.
  std::vector<std::uint64_t> masks(depth * stride);
  std::vector<int> signs(depth);
  std::vector<std::size_t> at(depth, 0);
  std::uint64_t tuples = 0;
  Value total = 0;

  auto load = [&](std::size_t j) {
    const std::uint32_t x = members[at[j]];
    const std::uint64_t* r = p.row(x);
    std::uint64_t* dst = masks.data() + j * stride;
    if (j == 0) {
      std::copy(r, r + stride, dst);
      signs[0] = g[x].sign();
    } else {
      const std::uint64_t* prev = dst - stride;
      for (std::size_t w = 0; w < stride; ++w) dst[w] = prev[w] & r[w];
      signs[j] = signs[j - 1] * g[x].sign();
    }
  };
  for (std::size_t j = 0; j < depth; ++j) load(j);
  for (;;) {
    ++tuples;
    const std::uint64_t* last = masks.data() + (depth - 1) * stride;
    if (std::any_of(last, last + stride, [](std::uint64_t w) { return w != 0; })) {
      auto z = p.find(last);
      if (z && a.contains_index(*z)) total = checked_add(total, signs[depth - 1]);
    }
    std::size_t j = depth;
    while (j > 0 && at[j - 1] + 1 == members.size()) at[--j] = 0;
    if (j == 0) break;
    ++at[j - 1];
    for (std::size_t i = j - 1; i < depth; ++i) load(i);
  }
  if (stats) stats->tuples += tuples;
  return total;
}

InteractionFunction::InteractionFunction(int arity, Rule rule) : arity_(arity), rule_(std::move(rule)) {
  check_arity(arity);
}

InteractionFunction InteractionFunction::standard(int arity) {
  InteractionFunction h(arity, [](const Complex& g, std::span<const std::uint32_t> x) -> Value {
    return configuration_sign(g, x);
  });
  h.standard_ = true;
  return h;
}

InteractionFunction InteractionFunction::zero(int arity) {
  return InteractionFunction(arity, [](const Complex&, std::span<const std::uint32_t>) -> Value {
    return 0;
  });
}

InteractionFunction InteractionFunction::delta(std::vector<std::uint32_t> z) {
  const int arity = static_cast<int>(z.size());
  return InteractionFunction(arity, [z = std::move(z)](const Complex&,
                                                       std::span<const std::uint32_t> x) -> Value {
    return std::ranges::equal(x, z) ? 1 : 0;
  });
}

InteractionFunction InteractionFunction::table(int arity, std::size_t n, std::vector<Value> values) {
  std::size_t expected = 1;
  for (int j = 0; j < arity; ++j) expected *= n;
  if (values.size() != expected) throw InputError("interaction table has the wrong size");
  return InteractionFunction(
      arity, [n, values = std::move(values)](const Complex&, std::span<const std::uint32_t> x) {
        std::size_t pos = 0;
        for (std::uint32_t i : x) pos = pos * n + i;
        return values.at(pos);
      });
}

Value energized_characteristic(const SimplexSubset& a, const InteractionFunction& h) {
  if (h.is_standard()) return characteristic(a, h.arity());
  const Complex& g = a.ambient();
  const std::vector<std::uint32_t> members = a.indices();
  const PackedSimplices& p = g.packed();
  const std::size_t stride = p.stride();
  const auto depth = static_cast<std::size_t>(h.arity());
  std::vector<std::uint32_t> tuple(depth);
  std::vector<std::uint64_t> masks(depth * stride);
  Value total = 0;

  // Depth-first over tuples, dropping branches whose intersection is empty.
  auto visit = [&](auto&& self, std::size_t j) -> void {
    for (std::uint32_t x : members) {
      const std::uint64_t* r = p.row(x);
      std::uint64_t* dst = masks.data() + j * stride;
      bool nonempty = false;
      for (std::size_t w = 0; w < stride; ++w) {
        dst[w] = j == 0 ? r[w] : (masks[(j - 1) * stride + w] & r[w]);
        nonempty |= dst[w] != 0;
      }
      if (!nonempty) continue;
      tuple[j] = x;
      if (j + 1 < depth) {
        self(self, j + 1);
      } else {
        auto z = p.find(dst);
        if (z && a.contains_index(*z)) total = checked_add(total, h(g, tuple));
      }
    }
  };
  if (!members.empty()) visit(visit, 0);
  return total;
}

Value multi_characteristic(std::span<const SimplexSubset> slots) {
  if (slots.empty()) throw DomainError("multi-characteristic needs at least one slot");
  for (const SimplexSubset& s : slots) require_same_ambient(slots[0], s);
  std::vector<std::vector<std::uint32_t>> lists;
  for (const SimplexSubset& s : slots) lists.push_back(s.indices());
  return intersection_dp(slots[0].ambient(), lists, nullptr, nullptr);
}

Value green(const Complex& g, std::span<const std::uint32_t> x, int m) {
  return configuration_sign(g, x) * characteristic(star_intersection(g, x).subset(), m);
}

Value green(const Complex& g, std::span<const std::uint32_t> x, const InteractionFunction& h) {
  return checked_mul(configuration_sign(g, x),
                     energized_characteristic(star_intersection(g, x).subset(), h));
}

int fermi(const SimplexSubset& a) {
  std::size_t odd = 0;
  for (std::uint32_t i : a.indices())
    if (a.ambient()[i].sign() < 0) ++odd;
  return odd % 2 == 0 ? 1 : -1;
}

int fermi(const Complex& g) { return fermi(SimplexSubset::all(g)); }

std::vector<std::pair<Simplex, Value>> curvature_profile(const Complex& g, int m) {
  std::vector<std::pair<Simplex, Value>> out;
  out.reserve(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    const std::uint32_t x[] = {i};
    out.emplace_back(g[i], green(g, x, m));
  }
  return out;
}

Value gauss_bonnet(const Complex& g, int m, EvalStats* stats) {
  check_arity(m);
  Value total = 0;
  for (std::uint32_t i = 0; i < g.size(); ++i)
    total = checked_add(total, g[i].sign() * characteristic_naive(star(g, i).subset(), m, stats));
  return total;
}

std::string to_json(const EnergyReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["m"] = r.m;
  j["k"] = r.k;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["n_simplices"] = r.n_simplices;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

EnergyReport make_report(std::string suite, int m, int k, Value lhs, Value rhs, std::size_t n,
                         Clock::time_point start) {
  EnergyReport r{std::move(suite), m, k, lhs, rhs, lhs == rhs, n, 0};
  r.elapsed_ms = ms_since(start);
  return r;
}

using SetOf = std::function<SimplexSubset(std::span<const std::uint32_t>)>;
using Eval = std::function<Value(const SimplexSubset&, EvalStats&)>;

// Sum over X in G^k of w(X) eval(set_of(X)). Work is split on x_1; each
// worker memoizes eval by set content.
Value configuration_sum(const Complex& g, int k, const SetOf& set_of, const Eval& eval,
                        const SumOptions& opts) {
  if (k < 1) throw InputError("configuration size k must be at least 1");
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::uint64_t configs = 1;
  for (int j = 0; j < k; ++j)
    if (__builtin_mul_overflow(configs, n, &configs)) throw ResourceError("configuration count overflows", 0);
  std::uint64_t estimate;
  if (__builtin_mul_overflow(configs, static_cast<std::uint64_t>(k), &estimate) ||
      estimate > opts.budget)
    throw ResourceError("configuration sum exceeds the work budget", 0);

  const unsigned workers = worker_count(opts.threads);
  std::vector<std::unordered_map<Membership, Value>> caches(workers);
  std::vector<Value> partial(n, 0);
  std::atomic<std::uint64_t> work{0};
  std::atomic<std::uint64_t> done{0};

  parallel_for(n, opts.threads, [&](std::size_t first, unsigned worker) {
    auto& cache = caches[worker];
    Configuration x(static_cast<std::size_t>(k), 0);
    x[0] = static_cast<std::uint32_t>(first);
    Value sum = 0;
    for (;;) {
      SimplexSubset s = set_of(x);
      auto it = cache.find(s.members());
      if (it == cache.end()) {
        EvalStats stats;
        Value v = eval(s, stats);
        if (work.fetch_add(stats.tuples) + stats.tuples > opts.budget)
          throw ResourceError("configuration sum exceeds the work budget", done.load());
        it = cache.emplace(s.members(), v).first;
      }
      sum = checked_add(sum, configuration_sign(g, x) * it->second);
      done.fetch_add(1, std::memory_order_relaxed);
      std::size_t j = x.size();
      while (j > 1 && x[j - 1] + 1 == n) x[--j] = 0;
      if (j == 1) break;
      ++x[j - 1];
    }
    partial[first] = sum;
  });

  Value total = 0;
  for (Value v : partial) total = checked_add(total, v);
  return total;
}

Eval plain_characteristic(int m) {
  return [m](const SimplexSubset& s, EvalStats& stats) { return characteristic(s, m, &stats); };
}

}  // namespace

EnergyReport energy_sum(const Complex& g, int k, const InteractionFunction& h,
                        const SumOptions& opts) {
  const auto start = Clock::now();
  const Value lhs = energized_characteristic(SimplexSubset::all(g), h);
  const Value rhs = configuration_sum(
      g, k, [&g](std::span<const std::uint32_t> x) { return star_intersection(g, x).subset(); },
      [&h](const SimplexSubset& s, EvalStats& stats) {
        if (h.is_standard()) return characteristic(s, h.arity(), &stats);
        stats.tuples += s.size();
        return energized_characteristic(s, h);
      },
      opts);
  return make_report("energy", h.arity(), k, lhs, rhs, g.size(), start);
}

EnergyReport energy_sum(const Complex& g, int m, int k, const SumOptions& opts) {
  return energy_sum(g, k, InteractionFunction::standard(m), opts);
}

EnergyReport energy_ball_sum(const Complex& g, int m, int k, const SumOptions& opts) {
  const auto start = Clock::now();
  const Value lhs = characteristic(g, m);
  const Value rhs = configuration_sum(
      g, k, [&g](std::span<const std::uint32_t> x) { return ball_set(g, x); },
      plain_characteristic(m), opts);
  return make_report("energy-ball", m, k, lhs, rhs, g.size(), start);
}

EnergyReport sphere_sum(const Complex& g, int m, int k, const SumOptions& opts) {
  const auto start = Clock::now();
  const Value rhs = configuration_sum(
      g, k, [&g](std::span<const std::uint32_t> x) { return sphere_set(g, x); },
      plain_characteristic(m), opts);
  return make_report("sphere", m, k, 0, rhs, g.size(), start);
}

EnergyReport dual_sphere_sum(const Complex& g, int m, int k, const SumOptions& opts) {
  const auto start = Clock::now();
  const Value rhs = configuration_sum(
      g, k, [&g](std::span<const std::uint32_t> x) { return dual_sphere_set(g, x); },
      plain_characteristic(m), opts);
  return make_report("dual-sphere", m, k, 0, rhs, g.size(), start);
}

EnergyReport valuation_identity(const SimplexSubset& a, const SimplexSubset& b, int m) {
  const auto start = Clock::now();
  require_same_ambient(a, b);
  const Value lhs = checked_add(characteristic(a | b, m), characteristic(a & b, m));
  const Value rhs = checked_add(characteristic(a, m), characteristic(b, m));
  return make_report("valuation", m, 0, lhs, rhs, a.ambient().size(), start);
}

EnergyReport valuation_check(const OpenSet& u, const OpenSet& v, int m) {
  return valuation_identity(u.subset(), v.subset(), m);
}

EnergyReport local_valuation_check(const Complex& g, std::span<const std::uint32_t> x, int m) {
  const auto start = Clock::now();
  const OpenSet u = star_intersection(g, x);
  const SimplexSubset b = closure(u.subset());
  const Value lhs = characteristic(b, m);
  const Value sign = m % 2 == 0 ? 1 : -1;
  const Value rhs = characteristic(u.subset(), m) - sign * characteristic(b - u.subset(), m);
  return make_report("local-valuation", m, static_cast<int>(x.size()), lhs, rhs, g.size(), start);
}

}  // namespace topochar
